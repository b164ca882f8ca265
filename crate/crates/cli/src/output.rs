//! Text renderings. Rotation numbers are always written as exact fractions.

use ltsig_core::{ProfileSegment, RootArc, SignatureProfile};
use num_rational::BigRational;
use serde_json::{json, Value};

/// `q/n` for every rational, including `0/1` and `1/1`.
pub fn fraction(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// An integer when possible, otherwise `q/n`.
pub fn rational_value(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        fraction(r)
    }
}

pub fn jump_location(arc: &RootArc) -> String {
    match arc {
        RootArc::ExactRotation(r) => fraction(&r.to_rational()),
        RootArc::IsolatedInterval { lo, hi } => format!("interval:{}..{}", fraction(lo), fraction(hi)),
    }
}

pub const PROFILE_CSV_HEADER: &str = "kind,start,end,value,certified";

/// Profile rows in increasing order; every value is certified.
pub fn profile_csv(profile: &SignatureProfile) -> String {
    let mut out = String::from(PROFILE_CSV_HEADER);
    out.push('\n');
    for segment in profile.segments() {
        let row = match segment {
            ProfileSegment::Arc { start, end, value } => {
                format!("arc,{},{},{value},true", fraction(&start), fraction(&end))
            }
            ProfileSegment::Jump { location, value } => {
                let at = jump_location(&location);
                let value = value.map(|v| v.to_string()).unwrap_or_default();
                format!("jump,{at},{at},{value},true")
            }
        };
        out.push_str(&row);
        out.push('\n');
    }
    out
}

pub fn profile_json(profile: &SignatureProfile) -> Value {
    let rows: Vec<Value> = profile
        .segments()
        .into_iter()
        .map(|segment| match segment {
            ProfileSegment::Arc { start, end, value } => json!({
                "kind": "arc",
                "start": fraction(&start),
                "end": fraction(&end),
                "value": value,
                "certified": true,
            }),
            ProfileSegment::Jump { location, value } => {
                let at = jump_location(&location);
                json!({"kind": "jump", "start": at, "end": at, "value": value, "certified": true})
            }
        })
        .collect();
    Value::Array(rows)
}

/// `key=value` pairs separated by spaces.
pub fn pairs(items: &[(&str, String)]) -> String {
    items
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// A one-row CSV with the given columns.
pub fn csv_row(items: &[(&str, String)]) -> String {
    let header: Vec<&str> = items.iter().map(|(k, _)| *k).collect();
    let values: Vec<&str> = items.iter().map(|(_, v)| v.as_str()).collect();
    format!("{}\n{}\n", header.join(","), values.join(","))
}

/// A JSON object; values that parse as JSON numbers or booleans stay typed.
pub fn json_object(items: &[(&str, String)]) -> Value {
    let map = items
        .iter()
        .map(|(k, v)| {
            let value = match serde_json::from_str::<Value>(v) {
                Ok(x @ (Value::Number(_) | Value::Bool(_))) => x,
                _ => Value::String(v.clone()),
            };
            (k.to_string(), value)
        })
        .collect();
    Value::Object(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ltsig_core::{profile, torus_knot, KnotSpec};

    #[test]
    fn fractions_always_have_denominators() {
        assert_eq!(fraction(&BigRational::from_integer(0.into())), "0/1");
        assert_eq!(fraction(&BigRational::from_integer(1.into())), "1/1");
        assert_eq!(fraction(&BigRational::new(6.into(), 20.into())), "3/10");
        assert_eq!(rational_value(&BigRational::new((-3).into(), 2.into())), "-3/2");
    }

    #[test]
    fn t25_csv() {
        let csv = profile_csv(&profile(&torus_knot(2, 5).unwrap()));
        let expected = "kind,start,end,value,certified\n\
            arc,0/1,1/10,0,true\n\
            jump,1/10,1/10,-1,true\n\
            arc,1/10,3/10,-2,true\n\
            jump,3/10,3/10,-3,true\n\
            arc,3/10,7/10,-4,true\n\
            jump,7/10,7/10,-3,true\n\
            arc,7/10,9/10,-2,true\n\
            jump,9/10,9/10,-1,true\n\
            arc,9/10,1/1,0,true\n";
        assert_eq!(csv, expected);
    }

    #[test]
    fn unknot_csv() {
        let csv = profile_csv(&profile(&KnotSpec::unknot()));
        assert_eq!(csv, "kind,start,end,value,certified\narc,0/1,1/1,0,true\n");
    }

    #[test]
    fn typed_json() {
        let v = json_object(&[("sigma", "-2".into()), ("certified", "true".into()), ("alpha", "1/2".into())]);
        assert_eq!(v, json!({"sigma": -2, "certified": true, "alpha": "1/2"}));
    }
}
