use serde::Serialize;
use shuffle_spectra::reps::{
    character, hom_dimension, induction_product, reflection_quotient, specht_rep, trivial_rep, verify_reflection_iso,
    ReflectionIsoReport,
};
use shuffle_spectra::{Partition, Representation, SpechtModule};

use super::{check_n, CliResult};
use crate::output::{Report, Table};

#[derive(Serialize)]
pub struct HomCheck {
    pub lambda: Partition,
    pub mu: Partition,
    pub dim: usize,
}

#[derive(Serialize)]
pub struct AssociativityCheck {
    pub checked: usize,
    pub failures: Vec<String>,
}

#[derive(Serialize)]
pub struct RepsCheckReport {
    pub seed: u64,
    pub n: usize,
    pub reflection_iso: Vec<ReflectionIsoReport>,
    pub specht_homs: Vec<HomCheck>,
    pub associativity: AssociativityCheck,
}

fn factor(reflection: bool, size: usize) -> CliResult<Representation> {
    Ok(if reflection && size >= 2 { reflection_quotient(size)? } else { trivial_rep(size) })
}

/// `(U∗V)∗W` against `U∗(V∗W)` on characters, for every split of at most
/// `n` with `U` trivial or a reflection quotient, likewise `V` and `W`.
pub fn associativity(n: usize) -> CliResult<AssociativityCheck> {
    let mut checked = 0;
    let mut failures = Vec::new();
    for a in 0..n {
        for b in 1..n {
            for c in 1..n {
                if a + b + c > n {
                    continue;
                }
                for kinds in 0..8u8 {
                    let (u, v, w) = (factor(kinds & 1 != 0, a)?, factor(kinds & 2 != 0, b)?, factor(kinds & 4 != 0, c)?);
                    let left = induction_product(&[induction_product(&[u.clone(), v.clone()])?, w.clone()])?;
                    let right = induction_product(&[u, induction_product(&[v, w])?])?;
                    for ct in Partition::all(a + b + c) {
                        if character(&left, &ct)? != character(&right, &ct)? {
                            failures.push(format!("sizes ({a},{b},{c}), kinds {kinds:03b}, class {ct}"));
                        }
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(AssociativityCheck { checked, failures })
}

pub fn specht_homs(n: usize) -> CliResult<Vec<HomCheck>> {
    let shapes = Partition::all(n);
    let reps = shapes.iter().map(|l| specht_rep(&SpechtModule::new(l)?)).collect::<Result<Vec<_>, _>>()?;
    let mut out = Vec::new();
    for (l, a) in shapes.iter().zip(&reps) {
        for (m, b) in shapes.iter().zip(&reps) {
            out.push(HomCheck { lambda: l.clone(), mu: m.clone(), dim: hom_dimension(a, b)? });
        }
    }
    Ok(out)
}

pub fn homs_ok(homs: &[HomCheck]) -> bool {
    homs.iter().all(|h| h.dim == usize::from(h.lambda == h.mu))
}

pub fn run(n: usize, seed: u64) -> CliResult<RepsCheckReport> {
    check_n(n, 6, "reps-check")?;
    let reflection_iso = (2..=n.max(2)).map(verify_reflection_iso).collect::<Result<Vec<_>, _>>()?;
    Ok(RepsCheckReport { seed, n, reflection_iso, specht_homs: specht_homs(n)?, associativity: associativity(n)? })
}

impl Report for RepsCheckReport {
    fn table(&self) -> Table {
        let yes = |b: bool| if b { "yes" } else { "NO" }.to_string();
        let rows = self
            .reflection_iso
            .iter()
            .map(|r| {
                vec![
                    r.p.to_string(),
                    yes(r.characters_match_dual),
                    yes(r.dual_intertwiner_ok),
                    yes(r.characters_match_specht),
                    yes(r.specht_intertwiner_ok),
                ]
            })
            .collect();
        let notes = vec![
            format!(
                "Hom(S^λ, S^μ) = δ over {} pairs of shapes of {}: {}",
                self.specht_homs.len(),
                self.n,
                if homs_ok(&self.specht_homs) { "pass" } else { "FAIL" }
            ),
            format!(
                "induction products associative on {} triples: {}",
                self.associativity.checked,
                if self.associativity.failures.is_empty() { "pass" } else { "FAIL" }
            ),
        ];
        Table { headers: vec!["p", "chi = dual", "iso to dual", "chi = Specht", "iso to Specht"], rows, notes }
    }

    fn passed(&self) -> bool {
        self.reflection_iso.iter().all(ReflectionIsoReport::passed)
            && homs_ok(&self.specht_homs)
            && self.associativity.failures.is_empty()
    }
}
