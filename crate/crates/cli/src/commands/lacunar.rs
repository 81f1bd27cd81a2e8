use serde::Serialize;
use shuffle_spectra::combinat::{enumerate_lacunar, fibonacci, gap_decomposition, m_vector};
use shuffle_spectra::symfunc::z_of_lacunar;
use shuffle_spectra::SchurExpansion;

use super::{check_n, CliResult};
use crate::output::{list, Report, Table};

#[derive(Serialize)]
pub struct LacunarRow {
    pub index: usize,
    #[serde(rename = "Q")]
    pub q: Vec<usize>,
    pub sum: usize,
    pub m_vector: Vec<usize>,
    pub j_seq: Vec<usize>,
    pub z: SchurExpansion,
}

#[derive(Serialize)]
pub struct LacunarReport {
    pub n: usize,
    pub seed: u64,
    pub count: usize,
    pub fibonacci: u128,
    pub sets: Vec<LacunarRow>,
}

pub fn run(n: usize, seed: u64) -> CliResult<LacunarReport> {
    check_n(n, 16, "lacunar")?;
    let sets = enumerate_lacunar(n)?
        .into_iter()
        .enumerate()
        .map(|(k, set)| {
            Ok(LacunarRow {
                index: k + 1,
                q: set.elements().to_vec(),
                sum: set.sum(),
                m_vector: m_vector(n, set.elements())?,
                j_seq: gap_decomposition(&set).j_seq,
                z: z_of_lacunar(&set)?,
            })
        })
        .collect::<CliResult<Vec<_>>>()?;
    Ok(LacunarReport { n, seed, count: sets.len(), fibonacci: fibonacci(n + 1), sets })
}

impl Report for LacunarReport {
    fn table(&self) -> Table {
        let rows = self
            .sets
            .iter()
            .map(|r| {
                vec![
                    r.index.to_string(),
                    shuffle_spectra::combinat::fmt_set(&r.q),
                    r.sum.to_string(),
                    list(&r.m_vector),
                    list(&r.j_seq),
                    r.z.to_string(),
                ]
            })
            .collect();
        Table {
            headers: vec!["i", "Q_i", "sum", "m-vector", "j-seq", "z_Q"],
            rows,
            notes: vec![format!("{} = f_{}", self.count, self.n + 1)],
        }
    }

    fn passed(&self) -> bool {
        self.count as u128 == self.fibonacci
    }
}
