use serde::Serialize;
use shuffle_spectra::spectrum::{spectrum_report, SpectrumReport};
use shuffle_spectra::{Partition, Rational, SpechtModule};

use super::{check_n, CliError, CliResult};
use crate::output::{list, Report, Table};

#[derive(Serialize)]
pub struct SpectrumOutput {
    pub seed: u64,
    #[serde(flatten)]
    pub report: SpectrumReport,
}

pub fn parse_weights(text: &str) -> CliResult<Vec<Rational>> {
    text.split(',')
        .map(|w| w.trim().parse::<Rational>().map_err(|_| CliError::Usage(format!("bad weight {w:?}"))))
        .collect()
}

pub fn run(n: usize, lambda: &Partition, weights: Option<Vec<Rational>>, verify: bool, seed: u64) -> CliResult<SpectrumOutput> {
    check_n(n, 8, "spectrum")?;
    if lambda.size() != n {
        return Err(CliError::Usage(format!("partition {lambda} has size {}, expected {n}", lambda.size())));
    }
    let weights = weights.unwrap_or_else(|| vec![Rational::one(); n]);
    if weights.len() != n {
        return Err(CliError::Usage(format!("{} weights given, expected {n}", weights.len())));
    }
    let module = SpechtModule::new(lambda)?;
    Ok(SpectrumOutput { seed, report: spectrum_report(&module, &weights, verify)? })
}

impl Report for SpectrumOutput {
    fn table(&self) -> Table {
        let r = &self.report;
        let rows = r
            .entries
            .iter()
            .map(|e| {
                vec![
                    e.set.to_string(),
                    list(&e.m_vector),
                    e.omega.to_string(),
                    e.multiplicity.to_string(),
                ]
            })
            .collect();
        let mut notes: Vec<String> =
            r.grouped.iter().map(|g| format!("eigenvalue {} with multiplicity {}", g.value, g.total)).collect();
        notes.push(format!("predicted char poly: {}", r.charpoly_rhs));
        if let Some(lhs) = &r.charpoly_lhs {
            notes.push(format!("computed char poly:  {lhs}"));
        }
        if let Some(eq) = r.equal {
            notes.push(format!("char poly identity: {}", if eq { "pass" } else { "FAIL" }));
        }
        if let Some(z) = r.annihilator_zero {
            notes.push(format!("annihilator product is zero: {}", if z { "pass" } else { "FAIL" }));
        }
        if let Some(d) = &r.diagonalizable {
            notes.push(format!(
                "distinct: {}, diagonalizable: {}, min poly: {}",
                d.distinct, d.diagonalizable, d.min_poly
            ));
        }
        Table { headers: vec!["I", "m-vector", "omega", "multiplicity"], rows, notes }
    }

    fn passed(&self) -> bool {
        self.report.passed()
    }
}
