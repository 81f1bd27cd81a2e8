use serde::Serialize;
use shuffle_spectra::combinat::count_syt;
use shuffle_spectra::groupalg::Permutation;
use shuffle_spectra::symfunc::mn_character;
use shuffle_spectra::{Matrix, Partition, SpechtModule};

use super::{check_n, CliError, CliResult};
use crate::output::{Report, Table};

#[derive(Serialize)]
pub struct CharacterValue {
    pub cycle_type: Partition,
    pub trace: i64,
    pub murnaghan_nakayama: i64,
}

#[derive(Serialize)]
pub struct SpechtReport {
    pub seed: u64,
    pub lambda: Partition,
    pub n: usize,
    pub dim: usize,
    pub standard_tableaux: Vec<Vec<Vec<usize>>>,
    pub characters: Vec<CharacterValue>,
    /// Matrices of `s_1, …, s_{n−1}` in the polytabloid basis.
    pub generators: Vec<Matrix>,
}

pub fn run(n: Option<usize>, lambda: &Partition, seed: u64) -> CliResult<SpechtReport> {
    let size = lambda.size();
    check_n(size, 8, "specht")?;
    if let Some(n) = n.filter(|&n| n != size) {
        return Err(CliError::Usage(format!("partition {lambda} has size {size}, expected {n}")));
    }
    let module = SpechtModule::new(lambda)?;
    let mut characters = Vec::new();
    for ct in Partition::all(size) {
        let trace = module.perm_matrix(&Permutation::of_cycle_type(&ct))?.trace();
        let trace = trace.to_i64().ok_or_else(|| CliError::Falsified(format!("non-integral trace {trace}")))?;
        characters.push(CharacterValue { murnaghan_nakayama: mn_character(lambda, &ct)?, cycle_type: ct, trace });
    }
    let generators = (1..size).map(|i| module.perm_matrix(&Permutation::simple(size, i)?)).collect::<Result<_, _>>()?;
    Ok(SpechtReport {
        seed,
        lambda: lambda.clone(),
        n: size,
        dim: module.dim(),
        standard_tableaux: module.standard_tableaux().to_vec(),
        characters,
        generators,
    })
}

impl Report for SpechtReport {
    fn table(&self) -> Table {
        let rows = self
            .characters
            .iter()
            .map(|c| vec![c.cycle_type.to_string(), c.trace.to_string(), c.murnaghan_nakayama.to_string()])
            .collect();
        let mut notes = vec![format!("dim S^({}) = {}", self.lambda, self.dim)];
        for t in &self.standard_tableaux {
            let rows: Vec<String> =
                t.iter().map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")).collect();
            notes.push(format!("  {}", rows.join(" / ")));
        }
        Table { headers: vec!["cycle type", "trace", "rim-hook rule"], rows, notes }
    }

    fn passed(&self) -> bool {
        self.dim as u128 == count_syt(&self.lambda) && self.characters.iter().all(|c| c.trace == c.murnaghan_nakayama)
    }
}
