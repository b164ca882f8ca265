//! Command implementations. Each returns the text to print on success.

use std::path::Path;

use clap::ValueEnum;
use ltsig_core::{
    averaged_sigma, echeverria_example, equivariant_casson, fo_conjecture_rhs, profile,
    signature_at_with, twist_spin_sigma, AlphaPoint, CassonInput, EcheverriaComparison, KnotSpec,
    RotationNumber, TwistSpinInput, DEFAULT_START_BITS,
};

use crate::catalog::Catalog;
use crate::error::CliError;
use crate::output::{csv_row, json_object, pairs, profile_csv, profile_json, rational_value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub format: OutputFormat,
    /// Reject decimal rotation numbers.
    pub certify: bool,
    pub precision_bits_start: u32,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            format: OutputFormat::Table,
            certify: true,
            precision_bits_start: DEFAULT_START_BITS,
        }
    }
}

impl RunConfig {
    pub fn new(format: OutputFormat, certify: bool, precision_bits_start: u32) -> Result<Self, CliError> {
        if precision_bits_start < 53 {
            return Err(CliError::Usage(format!(
                "precision must be at least 53 bits, got {precision_bits_start}"
            )));
        }
        Ok(RunConfig {
            format,
            certify,
            precision_bits_start,
        })
    }

    fn render(&self, items: &[(&str, String)]) -> String {
        match self.format {
            OutputFormat::Table => pairs(items) + "\n",
            OutputFormat::Csv => csv_row(items),
            OutputFormat::Json => json_object(items).to_string() + "\n",
        }
    }
}

/// `q/n` gives a root of unity; a decimal gives a generic point, allowed only
/// when certification is off.
pub fn parse_alpha(text: &str, config: &RunConfig) -> Result<AlphaPoint, CliError> {
    if text.contains('/') {
        let r: RotationNumber = text.parse().map_err(|e: ltsig_core::Error| CliError::BadAlpha(e.to_string()))?;
        return Ok(AlphaPoint::Exact(r));
    }
    let x: f64 = text
        .trim()
        .parse()
        .map_err(|_| CliError::BadAlpha(format!("expected q/n or a decimal, got {text:?}")))?;
    if config.certify {
        return Err(CliError::BadAlpha(format!(
            "decimal rotation {text} cannot be certified; write it as q/n or pass --no-certify"
        )));
    }
    AlphaPoint::generic(x).map_err(|e| CliError::BadAlpha(e.to_string()))
}

pub fn cmd_sigma(catalog: &Catalog, knot: &str, alpha: &str, config: &RunConfig) -> Result<String, CliError> {
    let k = catalog.get(knot)?;
    let alpha = parse_alpha(alpha, config)?;
    let reading = signature_at_with(k, &alpha, config.precision_bits_start);
    let averaged = averaged_sigma(k, &alpha)?;
    let mut items = vec![];
    if config.format != OutputFormat::Table {
        items.push(("knot", k.name().to_string()));
        items.push(("alpha", alpha.to_string()));
    }
    items.extend([
        ("sigma", reading.signature.to_string()),
        ("nullity", reading.nullity.to_string()),
        ("averaged", rational_value(&averaged)),
        ("certified", reading.certified.to_string()),
    ]);
    Ok(config.render(&items))
}

/// The profile as CSV (also for `table`), or as a JSON array of rows.
pub fn cmd_profile(catalog: &Catalog, knot: &str, out: Option<&Path>, config: &RunConfig) -> Result<String, CliError> {
    let k = catalog.get(knot)?;
    let p = profile(k);
    let text = match config.format {
        OutputFormat::Json => profile_json(&p).to_string() + "\n",
        OutputFormat::Table | OutputFormat::Csv => profile_csv(&p),
    };
    match out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| CliError::io(path, e))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn comparison_items(e: &EcheverriaComparison) -> Vec<(&'static str, String)> {
    vec![
        ("sigma_torus", e.sigma_torus.to_string()),
        ("discrepancy_printed", e.discrepancy_printed.to_string()),
        ("discrepancy_recomputed", e.discrepancy_recomputed.to_string()),
        ("sigma_G", e.sigma_g.to_string()),
        ("mismatch", e.mismatch().to_string()),
    ]
}

pub struct TwistSpinArgs {
    pub n: u32,
    pub d: u64,
    pub k: i64,
    pub lambda: i64,
}

/// Twist-spin signature, equivariant Casson invariant and the right side of
/// the Furuta-Ohta comparison; for `(n, d, k) = (3, 5, 2)` also the printed
/// and recomputed discrepancies.
pub fn cmd_twistspin(catalog: &Catalog, knot: &str, args: &TwistSpinArgs, config: &RunConfig) -> Result<String, CliError> {
    let k = catalog.get(knot)?;
    let input = TwistSpinInput::new(k.clone(), args.n, args.d, args.k)?;
    let casson = CassonInput(args.lambda);
    let twist = twist_spin_sigma(&input)?;
    let lambda_fo = equivariant_casson(k, args.n, casson)?;
    let rhs = fo_conjecture_rhs(&input, casson)?;
    let mut items = vec![
        ("knot", k.name().to_string()),
        ("twist_spin_sigma", twist.to_string()),
        ("equivariant_casson", rational_value(&lambda_fo)),
        ("fo_conjecture_rhs", rational_value(&rhs)),
    ];
    if (input.twist_order(), input.char_order(), input.exponent()) == (3, 5, 2) {
        items.extend(comparison_items(&echeverria_example(k)?));
    }
    if config.format == OutputFormat::Table {
        let (main, extra) = items.split_at(items.len().min(4));
        let mut text = pairs(main) + "\n";
        if !extra.is_empty() {
            text += &(pairs(extra) + "\n");
        }
        return Ok(text);
    }
    Ok(config.render(&items))
}

pub fn cmd_catalog_list(catalog: &Catalog, config: &RunConfig) -> String {
    match config.format {
        OutputFormat::Json => catalog.to_json(),
        OutputFormat::Csv => {
            let mut out = String::from("name,size,genus,source\n");
            for e in catalog.entries() {
                out += &format!("{},{},{},{}\n", e.name(), e.knot.matrix().size(), e.knot.genus(), e.source);
            }
            out
        }
        OutputFormat::Table => {
            let width = catalog.entries().iter().map(|e| e.name().len()).max().unwrap_or(4).max(4);
            let mut out = format!("{:<width$}  size  genus  source\n", "name");
            for e in catalog.entries() {
                out += &format!(
                    "{:<width$}  {:>4}  {:>5}  {}\n",
                    e.name(),
                    e.knot.matrix().size(),
                    e.knot.genus(),
                    e.source
                );
            }
            out
        }
    }
}

/// The `n = 3, d = 5, k = 2` comparison for one knot, or for every catalog
/// knot whose 3-fold branched cover is a homology sphere.
pub fn cmd_compare_fo(catalog: &Catalog, knot: Option<&str>, config: &RunConfig) -> Result<String, CliError> {
    let row = |k: &KnotSpec| -> Result<Vec<(&'static str, String)>, CliError> {
        let mut items = vec![("knot", k.name().to_string())];
        items.extend(comparison_items(&echeverria_example(k)?));
        Ok(items)
    };
    let rows: Vec<Vec<(&str, String)>> = match knot {
        Some(name) => vec![row(catalog.get(name)?)?],
        None => catalog
            .entries()
            .iter()
            .filter_map(|e| match row(&e.knot) {
                Err(CliError::Core(ltsig_core::Error::NotHomologySphereCover { .. })) => None,
                other => Some(other),
            })
            .collect::<Result<_, _>>()?,
    };
    Ok(match config.format {
        OutputFormat::Table => rows.iter().map(|r| pairs(r) + "\n").collect(),
        OutputFormat::Csv => {
            let mut out = String::new();
            for (i, r) in rows.iter().enumerate() {
                let text = csv_row(r);
                out += if i == 0 { &text } else { text.split_once('\n').map(|x| x.1).unwrap_or("") };
            }
            out
        }
        OutputFormat::Json => {
            serde_json::Value::Array(rows.iter().map(|r| json_object(r)).collect()).to_string() + "\n"
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(f: impl FnOnce(&Catalog, &RunConfig) -> Result<String, CliError>) -> String {
        f(&Catalog::builtin(), &RunConfig::default()).unwrap()
    }

    #[test]
    fn sigma_lines() {
        assert_eq!(
            run(|c, r| cmd_sigma(c, "trefoil", "1/2", r)),
            "sigma=-2 nullity=0 averaged=-2 certified=true\n"
        );
        assert_eq!(
            run(|c, r| cmd_sigma(c, "unknot", "1/3", r)),
            "sigma=0 nullity=0 averaged=0 certified=true\n"
        );
        assert_eq!(
            run(|c, r| cmd_sigma(c, "T(2,5)", "1/10", r)),
            "sigma=-1 nullity=1 averaged=-1 certified=true\n"
        );
    }

    #[test]
    fn decimal_alpha_needs_no_certify() {
        let c = Catalog::builtin();
        let strict = RunConfig::default();
        assert!(matches!(cmd_sigma(&c, "trefoil", "0.5", &strict), Err(CliError::BadAlpha(_))));
        let loose = RunConfig { certify: false, ..strict };
        assert_eq!(
            cmd_sigma(&c, "trefoil", "0.5", &loose).unwrap(),
            "sigma=-2 nullity=0 averaged=-2 certified=false\n"
        );
        assert!(matches!(cmd_sigma(&c, "trefoil", "x/2", &strict), Err(CliError::BadAlpha(_))));
    }

    #[test]
    fn twistspin_lines() {
        let args = TwistSpinArgs { n: 3, d: 5, k: 2, lambda: 0 };
        let text = run(|c, r| cmd_twistspin(c, "T(2,5)", &args, r));
        assert!(text.contains("twist_spin_sigma=0 equivariant_casson=-1 fo_conjecture_rhs=-8"), "{text}");
        assert!(text.contains("sigma_torus=0 discrepancy_printed=2 discrepancy_recomputed=4"), "{text}");
        let unknot = run(|c, r| cmd_twistspin(c, "unknot", &args, r));
        assert!(!unknot.split_whitespace().any(|kv| kv.ends_with(|ch: char| ch.is_ascii_digit() && ch != '0')));
        let gated = TwistSpinArgs { n: 2, d: 3, k: 1, lambda: 0 };
        let err = cmd_twistspin(&Catalog::builtin(), "trefoil", &gated, &RunConfig::default()).unwrap_err();
        assert_eq!(err.to_string(), "NotHomologySphereCover: |H1|=3");
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn compare_fo_lists_gated_knots() {
        let text = run(|c, r| cmd_compare_fo(c, None, r));
        assert!(text.contains("knot=T(2,5) sigma_torus=0 discrepancy_printed=2 discrepancy_recomputed=4 sigma_G=4 mismatch=true"));
        assert!(!text.contains("T(3,4)"), "3-fold cover of T(3,4) is not a homology sphere");
    }

    #[test]
    fn precision_floor() {
        assert!(RunConfig::new(OutputFormat::Table, true, 52).is_err());
        assert!(RunConfig::new(OutputFormat::Json, false, 53).is_ok());
    }
}
