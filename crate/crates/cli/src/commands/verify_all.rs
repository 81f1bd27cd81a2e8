use serde::Serialize;
use shuffle_spectra::combinat::{
    count_syt, enclosure, enumerate_lacunar, factorial, fibonacci, gap_decomposition, m_vector, non_shadow,
};
use shuffle_spectra::filtration::{
    build_filtration, rank_formula, stability_pairs, subquotient_rank, verify_fixed_subspace, verify_nabla_properties,
    verify_subquotient_characters, FibonacciFiltration,
};
use shuffle_spectra::groupalg::Permutation;
use shuffle_spectra::reps::verify_reflection_iso;
use shuffle_spectra::spectrum::{annihilator_filtration, spectrum_report, weight_sweep};
use shuffle_spectra::symfunc::{mn_character, z_of_lacunar};
use shuffle_spectra::{Partition, SpechtModule};

use super::filtration::{stability_by_stage, SAMPLE_FRACTION};
use super::reps_check::{associativity, homs_ok, specht_homs};
use super::{check_n, CliResult};
use crate::budget::{Budget, Status};
use crate::output::{Report, Table};

#[derive(Serialize)]
pub struct Check {
    pub criterion: usize,
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

#[derive(Serialize)]
pub struct VerifyAllReport {
    pub n: usize,
    pub seed: u64,
    pub checks: Vec<Check>,
}

type Outcome = CliResult<(bool, String)>;

fn census(n: usize) -> Outcome {
    let ok = (1..=n).all(|k| enumerate_lacunar(k).is_ok_and(|s| s.len() as u128 == fibonacci(k + 1)));
    Ok((ok, format!("|enumerate_lacunar(k)| = f_(k+1) for k = 1..{n}")))
}

fn worked_examples() -> Outcome {
    let ok = m_vector(6, &[2, 5])? == [1, 0, 2, 1, 0, 1]
        && non_shadow(5, &[2, 3]) == [4]
        && enclosure(5, &[2, 3]) == [0, 2, 3, 6];
    Ok((ok, "m-vector of {2,5} at n = 6; non-shadow and enclosure of {2,3} at n = 5".into()))
}

fn ranks(filt: &FibonacciFiltration) -> Outcome {
    let mut ok = true;
    let mut total = 0u128;
    for i in 1..=filt.len() {
        let r = subquotient_rank(filt, i)? as u128;
        ok &= r == rank_formula(&gap_decomposition(filt.q(i)));
        total += r;
    }
    ok &= total == factorial(filt.n());
    Ok((ok, format!("{} stages against the closed formula, total {total}", filt.len())))
}

fn triangularity(filt: &FibonacciFiltration, seed: u64, budget: &Budget) -> CliResult<(Status, String)> {
    let exhaustive = filt.n() <= 5;
    let sample = stability_pairs(filt, (!exhaustive).then_some((SAMPLE_FRACTION, seed)));
    let (status, checked, total) = stability_by_stage(filt, sample, false, budget)?;
    let combined = status.into_iter().fold(Status::NotRun, Status::combine);
    let scope = if exhaustive { "all".to_string() } else { format!("seeded {:.0}% sample of", SAMPLE_FRACTION * 100.0) };
    Ok((combined, format!("{checked} of {total} pairs ({scope} (i, ℓ) pairs)")))
}

fn characters(filt: &FibonacciFiltration) -> Outcome {
    let mut ok = true;
    for i in 1..=filt.len() {
        ok &= verify_subquotient_characters(filt, i)?.passed;
    }
    Ok((ok, format!("{} subquotients on every cycle type", filt.len())))
}

fn nabla(filt: &FibonacciFiltration, seed: u64) -> Outcome {
    let mut ok = true;
    for i in 1..=filt.len() {
        ok &= verify_nabla_properties(filt, i, seed)?.passed();
        if filt.n() <= 5 {
            ok &= verify_fixed_subspace(filt, i)?.passed();
        }
    }
    let l2 = if filt.n() <= 5 { " and fixed-subspace inclusion" } else { "" };
    Ok((ok, format!("∇_p properties{l2} on {} stages", filt.len())))
}

fn spectra(n: usize, seed: u64) -> Outcome {
    let sweep = weight_sweep(n, 5, seed);
    let mut ok = true;
    let mut count = 0;
    for lambda in Partition::all(n) {
        let module = SpechtModule::new(&lambda)?;
        for w in &sweep {
            let r = spectrum_report(&module, w, true)?;
            let total: u64 = r.entries.iter().map(|e| e.multiplicity).sum();
            ok &= r.passed() && r.equal == Some(true) && total as u128 == count_syt(&lambda);
            count += 1;
        }
    }
    Ok((ok, format!("{count} (λ, ω) instances: char poly, annihilator, diagonalizability")))
}

fn annihilators(filt: &FibonacciFiltration, seed: u64) -> Outcome {
    let mut ok = true;
    let shapes = Partition::all(filt.n());
    for lambda in &shapes {
        ok &= annihilator_filtration(lambda, filt, 10, seed)?.passed();
    }
    Ok((ok, format!("{} Specht modules, 10 monomials per stage", shapes.len())))
}

fn appendix(n: usize) -> Outcome {
    let mut ok = true;
    for p in 2..=n.clamp(2, 6) {
        ok &= verify_reflection_iso(p)?.passed();
    }
    ok &= homs_ok(&specht_homs(n)?);
    let assoc = associativity(n.min(6))?;
    ok &= assoc.failures.is_empty();
    Ok((ok, format!("Z_p isomorphisms for p ≤ {}, Specht homs, {} associativity triples", n.clamp(2, 6), assoc.checked)))
}

fn coherence(n: usize) -> Outcome {
    let mut ok = true;
    let module_count = Partition::all(n).len();
    for lambda in Partition::all(n) {
        let module = SpechtModule::new(&lambda)?;
        for ct in Partition::all(n) {
            let trace = module.perm_matrix(&Permutation::of_cycle_type(&ct))?.trace();
            ok &= trace.to_i64() == Some(mn_character(&lambda, &ct)?);
        }
    }
    let mut total = 0u128;
    for set in enumerate_lacunar(n)? {
        for (lambda, c) in z_of_lacunar(&set)?.terms() {
            total += c as u128 * count_syt(lambda);
        }
    }
    ok &= total == factorial(n);
    Ok((ok, format!("character traces of {module_count} Specht modules; Σ c·f^λ = {total}")))
}

pub fn run(n: usize, seed: u64, budget: &Budget) -> CliResult<VerifyAllReport> {
    check_n(n, 7, "verify-all")?;
    let filt = build_filtration(n)?;
    let mut checks = Vec::new();
    let mut push = |criterion, name, outcome: CliResult<(Status, String)>| -> CliResult<()> {
        let (status, detail) = outcome?;
        checks.push(Check { criterion, name, status, detail });
        Ok(())
    };
    let gated = |run: &dyn Fn() -> Outcome| -> CliResult<(Status, String)> {
        if budget.exhausted() {
            return Ok((Status::Skipped, "budget exhausted".into()));
        }
        run().map(|(ok, d)| (Status::from_bool(ok), d))
    };
    push(1, "lacunar census", gated(&|| census(n)))?;
    push(2, "worked examples", gated(&worked_examples))?;
    push(3, "filtration ranks", gated(&|| ranks(&filt)))?;
    push(4, "triangularity", triangularity(&filt, seed, budget))?;
    push(5, "subquotient characters", gated(&|| characters(&filt)))?;
    push(6, "nabla lemmas", gated(&|| nabla(&filt, seed)))?;
    push(7, "spectrum theorem", gated(&|| spectra(n, seed)))?;
    push(8, "Specht annihilator filtration", gated(&|| annihilators(&filt, seed)))?;
    push(9, "appendix propositions", gated(&|| appendix(n)))?;
    push(10, "oracle coherence", gated(&|| coherence(n)))?;
    Ok(VerifyAllReport { n, seed, checks })
}

impl Report for VerifyAllReport {
    fn table(&self) -> Table {
        let rows = self
            .checks
            .iter()
            .map(|c| vec![c.criterion.to_string(), c.name.to_string(), c.status.as_str().to_string(), c.detail.clone()])
            .collect();
        let failed = self.checks.iter().filter(|c| c.status == Status::Fail).count();
        Table {
            headers: vec!["criterion", "check", "status", "detail"],
            rows,
            notes: vec![format!("n = {}, seed = {}: {failed} failed", self.n, self.seed)],
        }
    }

    fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    fn warnings(&self) -> Vec<String> {
        let skipped = self.checks.iter().filter(|c| c.status == Status::Skipped).count();
        if skipped == 0 {
            return Vec::new();
        }
        vec![format!("budget exhausted: {skipped} checks SKIPPED")]
    }
}
