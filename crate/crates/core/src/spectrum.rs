//! Eigenvalues of `L_λ(ω_1 t_1 + ⋯ + ω_n t_n)` on Specht modules and the
//! annihilator filtrations `V^{F_i} = {v ∈ V : F_i v = 0}`.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::combinat::{count_syt, enumerate_lacunar, m_vector, LacunarSet, Partition};
use crate::error::{invalid, Result};
use crate::exactlin::{char_poly, min_poly, sparse_from_dense, EchelonBasis, Matrix, Rational, UniPoly};
use crate::filtration::{subquotient_character, FibonacciFiltration};
use crate::groupalg::{ocs, t_shuffle, SymmetricGroup};
use crate::reps::{character, character_inner_product, Representation};
use crate::specht::{action_from_table, SpechtModule};
use crate::symfunc::z_of_lacunar;

fn ser_set<S: Serializer>(set: &LacunarSet, s: S) -> std::result::Result<S::Ok, S::Error> {
    set.elements().serialize(s)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SpectrumEntry {
    #[serde(rename = "I", serialize_with = "ser_set")]
    pub set: LacunarSet,
    pub m_vector: Vec<usize>,
    pub omega: Rational,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct GroupedEigenvalue {
    pub value: Rational,
    pub total: u64,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SpectrumPrediction {
    pub n: usize,
    pub lambda: Partition,
    pub weights: Vec<Rational>,
    /// Lacunar sets with `c_I^λ ≠ 0`, in filtration order.
    pub entries: Vec<SpectrumEntry>,
    /// Distinct eigenvalues in increasing order.
    pub grouped: Vec<GroupedEigenvalue>,
}

impl SpectrumPrediction {
    /// `Π_I (x − ω_I)^{c_I^λ}`.
    pub fn charpoly(&self) -> UniPoly {
        UniPoly::from_roots(self.grouped.iter().map(|g| (&g.value, g.total as usize)))
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    /// No two contributing `I` share an eigenvalue.
    pub fn distinct(&self) -> bool {
        self.grouped.len() == self.entries.len()
    }
}

fn check_sizes(lambda: &Partition, weights: &[Rational]) -> Result<()> {
    if lambda.size() != weights.len() || lambda.is_empty() {
        return Err(invalid(format!("partition {lambda} of {} with {} weights", lambda.size(), weights.len())));
    }
    Ok(())
}

/// `ω_I = Σ_ℓ ω_ℓ m_{I,ℓ}`.
pub fn omega(weights: &[Rational], m: &[usize]) -> Rational {
    weights.iter().zip(m).map(|(w, &k)| w * &Rational::from(k)).sum()
}

pub fn predict_spectrum(lambda: &Partition, weights: &[Rational]) -> Result<SpectrumPrediction> {
    check_sizes(lambda, weights)?;
    let n = lambda.size();
    let mut entries = Vec::new();
    let mut grouped: BTreeMap<Rational, u64> = BTreeMap::new();
    for set in enumerate_lacunar(n)? {
        let c = z_of_lacunar(&set)?.coeff(lambda);
        if c == 0 {
            continue;
        }
        let m = m_vector(n, set.elements())?;
        let w = omega(weights, &m);
        *grouped.entry(w.clone()).or_default() += c as u64;
        entries.push(SpectrumEntry { set, m_vector: m, omega: w, multiplicity: c as u64 });
    }
    Ok(SpectrumPrediction {
        n,
        lambda: lambda.clone(),
        weights: weights.to_vec(),
        entries,
        grouped: grouped.into_iter().map(|(value, total)| GroupedEigenvalue { value, total }).collect(),
    })
}

/// `L_λ(ocs(weights))`.
pub fn ocs_action(module: &SpechtModule, weights: &[Rational]) -> Result<Matrix> {
    check_sizes(module.shape(), weights)?;
    module.action_matrix(&ocs(module.n(), weights)?)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CharpolyReport {
    pub lhs: UniPoly,
    pub rhs: UniPoly,
    pub equal: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct AnnihilatorReport {
    /// `ω_I` of each factor, in filtration order.
    pub factors: Vec<Rational>,
    pub is_zero: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DiagonalizabilityReport {
    pub distinct: bool,
    pub diagonalizable: bool,
    pub min_poly: UniPoly,
}

impl DiagonalizabilityReport {
    /// Distinct eigenvalues force a squarefree minimal polynomial.
    pub fn consistent(&self) -> bool {
        !self.distinct || self.diagonalizable
    }
}

fn charpoly_report(action: &Matrix, pred: &SpectrumPrediction) -> Result<CharpolyReport> {
    let lhs = char_poly(action)?;
    let rhs = pred.charpoly();
    Ok(CharpolyReport { equal: lhs == rhs, lhs, rhs })
}

fn annihilator_report(action: &Matrix, pred: &SpectrumPrediction) -> AnnihilatorReport {
    let d = action.rows();
    let mut prod = Matrix::identity(d);
    for e in &pred.entries {
        prod = &prod * &(action - &Matrix::scalar(d, &e.omega));
    }
    AnnihilatorReport { factors: pred.entries.iter().map(|e| e.omega.clone()).collect(), is_zero: prod.is_zero() }
}

fn diagonalizability_report(action: &Matrix, pred: &SpectrumPrediction) -> Result<DiagonalizabilityReport> {
    let mp = min_poly(action)?;
    Ok(DiagonalizabilityReport { distinct: pred.distinct(), diagonalizable: mp.is_squarefree(), min_poly: mp })
}

pub fn verify_charpoly(lambda: &Partition, weights: &[Rational]) -> Result<CharpolyReport> {
    let pred = predict_spectrum(lambda, weights)?;
    charpoly_report(&ocs_action(&SpechtModule::new(lambda)?, weights)?, &pred)
}

pub fn verify_annihilator(lambda: &Partition, weights: &[Rational]) -> Result<AnnihilatorReport> {
    let pred = predict_spectrum(lambda, weights)?;
    Ok(annihilator_report(&ocs_action(&SpechtModule::new(lambda)?, weights)?, &pred))
}

pub fn check_diagonalizable(lambda: &Partition, weights: &[Rational]) -> Result<DiagonalizabilityReport> {
    let pred = predict_spectrum(lambda, weights)?;
    diagonalizability_report(&ocs_action(&SpechtModule::new(lambda)?, weights)?, &pred)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SpectrumReport {
    pub n: usize,
    pub lambda: Partition,
    pub weights: Vec<Rational>,
    pub entries: Vec<SpectrumEntry>,
    pub grouped: Vec<GroupedEigenvalue>,
    pub charpoly_lhs: Option<UniPoly>,
    pub charpoly_rhs: UniPoly,
    pub equal: Option<bool>,
    pub annihilator_zero: Option<bool>,
    pub diagonalizable: Option<DiagonalizabilityReport>,
}

impl SpectrumReport {
    /// `false` only when a verified identity failed.
    pub fn passed(&self) -> bool {
        self.equal != Some(false)
            && self.annihilator_zero != Some(false)
            && self.diagonalizable.as_ref().is_none_or(DiagonalizabilityReport::consistent)
    }
}

/// Prediction, plus the three brute-force checks when `verify` is set.
pub fn spectrum_report(module: &SpechtModule, weights: &[Rational], verify: bool) -> Result<SpectrumReport> {
    let pred = predict_spectrum(module.shape(), weights)?;
    let rhs = pred.charpoly();
    let (mut lhs, mut equal, mut annihilator_zero, mut diag) = (None, None, None, None);
    if verify {
        let action = ocs_action(module, weights)?;
        let cp = charpoly_report(&action, &pred)?;
        equal = Some(cp.equal);
        lhs = Some(cp.lhs);
        annihilator_zero = Some(annihilator_report(&action, &pred).is_zero);
        diag = Some(diagonalizability_report(&action, &pred)?);
    }
    Ok(SpectrumReport {
        n: pred.n,
        lambda: pred.lambda,
        weights: pred.weights,
        entries: pred.entries,
        grouped: pred.grouped,
        charpoly_lhs: lhs,
        charpoly_rhs: rhs,
        equal,
        annihilator_zero,
        diagonalizable: diag,
    })
}

/// All-ones, each `e_ℓ`, then `random` seeded integer vectors in `[−9, 9]^n`.
pub fn weight_sweep(n: usize, random: usize, seed: u64) -> Vec<Vec<Rational>> {
    let mut out = vec![vec![Rational::one(); n]];
    for l in 0..n {
        out.push((0..n).map(|k| Rational::from(i64::from(k == l))).collect());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random {
        out.push((0..n).map(|_| Rational::from_integer(rng.random_range(-9..=9))).collect());
    }
    out
}

/// Matrices of `V(σ)` for every `σ ∈ S_n` in lexicographic order, and of each `t_ℓ`.
struct ActionTables {
    perms: Vec<Matrix>,
    shuffles: Vec<Matrix>,
}

impl ActionTables {
    fn new(perms: Vec<Matrix>, n: usize) -> Result<Self> {
        let shuffles = (1..=n).map(|l| Ok(action_from_table(&perms, &t_shuffle(n, l)?))).collect::<Result<_>>()?;
        Ok(ActionTables { perms, shuffles })
    }

    fn dim(&self) -> usize {
        self.perms[0].rows()
    }

    fn sparse_action(&self, v: &[(usize, Rational)]) -> Matrix {
        let d = self.dim();
        let mut acc = Matrix::zeros(d, d);
        for (r, c) in v {
            acc = &acc + &self.perms[*r].scale(c);
        }
        acc
    }
}

/// Column bases of `V^{F_i}` for `i = 0..=f_{n+1}`.
fn kernel_chain(tables: &ActionTables, filt: &FibonacciFiltration) -> Result<Vec<Matrix>> {
    let d = tables.dim();
    let mut bases = vec![Matrix::identity(d)];
    for i in 1..=filt.len() {
        let prev = bases.last().expect("nonempty");
        if prev.cols() == 0 {
            bases.push(prev.clone());
            continue;
        }
        let mut stacked = Matrix::zeros(0, prev.cols());
        for r in filt.rank(i - 1)..filt.rank(i) {
            let restricted = &tables.sparse_action(filt.echelon().row(r)) * prev;
            stacked = stacked.vstack(&restricted)?;
            // keep only independent rows
            let (red, pivots) = stacked.rref();
            stacked = Matrix::from_rows(red.row_vecs().into_iter().take(pivots.len()).collect())
                .unwrap_or_else(|_| Matrix::zeros(0, prev.cols()));
            if pivots.len() == prev.cols() {
                break;
            }
        }
        let null = if stacked.rows() == 0 { Matrix::identity(prev.cols()).row_vecs() } else { stacked.nullspace() };
        let next = if null.is_empty() {
            Matrix::zeros(d, 0)
        } else {
            prev.checked_mul(&Matrix::from_rows(null)?.transpose())?
        };
        bases.push(next);
    }
    Ok(bases)
}

/// Every column of `op · from` lies in the column span of `into`.
fn maps_into(op: &Matrix, from: &Matrix, into: &Matrix) -> Result<bool> {
    if from.cols() == 0 {
        return Ok(true);
    }
    let image = op.checked_mul(from)?;
    let mut span = EchelonBasis::new(op.rows());
    for c in 0..into.cols() {
        span.insert(&sparse_from_dense(&into.column(c)))?;
    }
    for c in 0..image.cols() {
        if !span.contains(&sparse_from_dense(&image.column(c)), span.len())? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ScalarCheck {
    pub ell: usize,
    pub m: usize,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct MonomialCheck {
    /// `t_{w_1} ⋯ t_{w_k}`.
    pub word: Vec<usize>,
    pub scalar: u64,
    pub ok: bool,
}

fn scalar_checks(tables: &ActionTables, filt: &FibonacciFiltration, bases: &[Matrix], i: usize) -> Result<Vec<ScalarCheck>> {
    let d = tables.dim();
    let n = filt.n();
    let m = m_vector(n, filt.q(i).elements())?;
    (1..=n)
        .map(|l| {
            let shifted = &tables.shuffles[l - 1] - &Matrix::scalar(d, &Rational::from(m[l - 1]));
            Ok(ScalarCheck { ell: l, m: m[l - 1], ok: maps_into(&shifted, &bases[i - 1], &bases[i])? })
        })
        .collect()
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct AnnihilatorStage {
    pub index: usize,
    pub q: Vec<usize>,
    pub c: u64,
    /// `dim F_{i−1}^λ − dim F_i^λ`.
    pub drop: usize,
    pub scalars: Vec<ScalarCheck>,
    pub monomials: Vec<MonomialCheck>,
}

impl AnnihilatorStage {
    pub fn passed(&self) -> bool {
        self.drop as u64 == self.c && self.scalars.iter().all(|s| s.ok) && self.monomials.iter().all(|m| m.ok)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SpechtAnnihilatorFiltration {
    pub lambda: Partition,
    /// `dims[i] = dim F_i^λ`.
    pub dims: Vec<usize>,
    pub stages: Vec<AnnihilatorStage>,
    #[serde(skip)]
    pub bases: Vec<Matrix>,
}

impl SpechtAnnihilatorFiltration {
    pub fn passed(&self) -> bool {
        let syt = count_syt(&self.lambda) as usize;
        self.dims.first() == Some(&syt)
            && self.dims.last() == Some(&0)
            && self.dims.windows(2).all(|w| w[0] >= w[1])
            && self.stages.iter().all(AnnihilatorStage::passed)
    }
}

/// `F_i^λ` for every stage with properties 1–3 checked in full and
/// property 4 on `monomials` seeded random words per stage.
pub fn annihilator_filtration(
    lambda: &Partition,
    filt: &FibonacciFiltration,
    monomials: usize,
    seed: u64,
) -> Result<SpechtAnnihilatorFiltration> {
    let n = filt.n();
    if lambda.size() != n {
        return Err(invalid(format!("partition {lambda} with a filtration of Q[S_{n}]")));
    }
    let module = SpechtModule::new(lambda)?;
    let tables = ActionTables::new(module.perm_table()?, n)?;
    let bases = kernel_chain(&tables, filt)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = tables.dim();
    let mut stages = Vec::with_capacity(filt.len());
    for i in 1..=filt.len() {
        let set = filt.q(i);
        let c = z_of_lacunar(set)?.coeff(lambda) as u64;
        let m = m_vector(n, set.elements())?;
        let mut words = Vec::with_capacity(monomials);
        for _ in 0..monomials {
            let len = rng.random_range(2..=4);
            let word: Vec<usize> = (0..len).map(|_| rng.random_range(1..=n)).collect();
            let scalar: u64 = word.iter().map(|&l| m[l - 1] as u64).product();
            let op = word.iter().fold(Matrix::identity(d), |acc, &l| &acc * &tables.shuffles[l - 1]);
            let shifted = &op - &Matrix::scalar(d, &Rational::from_integer(scalar as i64));
            let ok = maps_into(&shifted, &bases[i - 1], &bases[i])?;
            words.push(MonomialCheck { word, scalar, ok });
        }
        stages.push(AnnihilatorStage {
            index: i,
            q: set.elements().to_vec(),
            c,
            drop: bases[i - 1].cols() - bases[i].cols(),
            scalars: scalar_checks(&tables, filt, &bases, i)?,
            monomials: words,
        });
    }
    Ok(SpechtAnnihilatorFiltration { lambda: lambda.clone(), dims: bases.iter().map(Matrix::cols).collect(), stages, bases })
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct GeneralizedStage {
    pub index: usize,
    pub q: Vec<usize>,
    /// `dim V^{F_{i−1}} − dim V^{F_i}`.
    pub drop: usize,
    /// `⟨χ_{F_i/F_{i−1}}, χ_V⟩`.
    pub hom_dim: Rational,
    pub scalars_ok: bool,
}

impl GeneralizedStage {
    pub fn passed(&self) -> bool {
        self.hom_dim == Rational::from(self.drop) && self.scalars_ok
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct GeneralizedFiltrationReport {
    pub n: usize,
    pub dim: usize,
    pub dims: Vec<usize>,
    pub stages: Vec<GeneralizedStage>,
}

impl GeneralizedFiltrationReport {
    pub fn passed(&self) -> bool {
        self.dims.last() == Some(&0) && self.stages.iter().all(GeneralizedStage::passed)
    }
}

/// `V^{F_i}` for an explicit representation, with the triangular action of
/// each `t_ℓ` and `dim V^{F_{i−1}}/V^{F_i} = dim Hom(F_i/F_{i−1}, V)`.
pub fn generalized_annihilator_filtration(v: &Representation, filt: &FibonacciFiltration) -> Result<GeneralizedFiltrationReport> {
    let n = filt.n();
    if v.n() != n {
        return Err(invalid(format!("representation of S_{} with a filtration of Q[S_{n}]", v.n())));
    }
    let perms = SymmetricGroup::new(n).elements().iter().map(|p| v.perm_matrix(p)).collect::<Result<Vec<_>>>()?;
    let tables = ActionTables::new(perms, n)?;
    let bases = kernel_chain(&tables, filt)?;
    let classes = Partition::all(n);
    let chi_v: BTreeMap<Partition, Rational> =
        classes.iter().map(|ct| Ok((ct.clone(), character(v, ct)?))).collect::<Result<_>>()?;
    let mut stages = Vec::with_capacity(filt.len());
    for i in 1..=filt.len() {
        let chi_sub: BTreeMap<Partition, Rational> =
            classes.iter().map(|ct| Ok((ct.clone(), subquotient_character(filt, i, ct)?))).collect::<Result<_>>()?;
        let hom_dim = character_inner_product(n, |ct| chi_sub[ct].clone(), |ct| chi_v[ct].clone());
        stages.push(GeneralizedStage {
            index: i,
            q: filt.q(i).elements().to_vec(),
            drop: bases[i - 1].cols() - bases[i].cols(),
            hom_dim,
            scalars_ok: scalar_checks(&tables, filt, &bases, i)?.iter().all(|s| s.ok),
        });
    }
    Ok(GeneralizedFiltrationReport { n, dim: v.dim(), dims: bases.iter().map(Matrix::cols).collect(), stages })
}

/// `Σ_ℓ ω_ℓ (n + 1 − ℓ)`, the eigenvalue on the trivial module.
pub fn trivial_eigenvalue(weights: &[Rational]) -> Rational {
    let n = weights.len();
    weights.iter().enumerate().map(|(k, w)| w * &Rational::from(n - k)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filtration::build_filtration;
    use crate::reps::{natural_rep, regular_rep, specht_rep};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn w(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_integer(x)).collect()
    }

    #[test]
    fn prediction_examples() {
        let pred = predict_spectrum(&p("3"), &w(&[1, 1, 1])).unwrap();
        assert_eq!(pred.entries.len(), 1);
        assert_eq!(pred.entries[0].omega, Rational::from(6));
        let pred = predict_spectrum(&p("2,1"), &w(&[1, 0, 0])).unwrap();
        let got: Vec<(Vec<usize>, Vec<usize>, Rational, u64)> = pred
            .entries
            .iter()
            .map(|e| (e.set.elements().to_vec(), e.m_vector.clone(), e.omega.clone(), e.multiplicity))
            .collect();
        assert_eq!(
            got,
            vec![(vec![1], vec![0, 2, 1], Rational::zero(), 1), (vec![2], vec![1, 0, 1], Rational::one(), 1)]
        );
        assert!(pred.distinct());
        for n in 1..=6 {
            let pred = predict_spectrum(&Partition::from_unsorted(vec![1; n]), &w(&vec![1; n])).unwrap();
            assert_eq!(pred.entries.len(), 1);
            assert_eq!(pred.total_multiplicity(), 1);
        }
        assert!(predict_spectrum(&p("2,2"), &w(&[1, 0, 0])).is_err());
    }

    #[test]
    fn verification_examples() {
        let r = verify_charpoly(&p("3"), &w(&[1, 1, 1])).unwrap();
        assert!(r.equal);
        assert_eq!(r.lhs, UniPoly::from_i64(&[-6, 1]));
        let r = verify_charpoly(&p("2,1"), &w(&[1, 0, 0])).unwrap();
        assert!(r.equal);
        assert_eq!(r.lhs, UniPoly::from_i64(&[0, -1, 1]));
        assert!(verify_annihilator(&p("2,1"), &w(&[1, 0, 0])).unwrap().is_zero);
        let d = check_diagonalizable(&p("2,1"), &w(&[1, 0, 0])).unwrap();
        assert!(d.distinct && d.diagonalizable);
        let d = check_diagonalizable(&p("2,1"), &w(&[0, 0, 0])).unwrap();
        assert!(!d.distinct && d.diagonalizable);
        assert_eq!(d.min_poly, UniPoly::x());
    }

    #[test]
    fn sweep_n4() {
        for lambda in Partition::all(4) {
            let module = SpechtModule::new(&lambda).unwrap();
            for weights in weight_sweep(4, 3, 11) {
                let r = spectrum_report(&module, &weights, true).unwrap();
                assert!(r.passed(), "{lambda} {weights:?}");
                let total: u64 = r.grouped.iter().map(|g| g.total).sum();
                assert_eq!(total as u128, count_syt(&lambda));
            }
        }
    }

    #[test]
    fn annihilator_filtration_examples() {
        let f = build_filtration(3).unwrap();
        let a = annihilator_filtration(&p("2,1"), &f, 10, 0).unwrap();
        assert_eq!(a.dims, vec![2, 2, 1, 0]);
        assert!(a.passed());
        let a = annihilator_filtration(&p("3"), &f, 10, 0).unwrap();
        assert_eq!(a.dims, vec![1, 0, 0, 0]);
        assert!(a.passed());
        let f4 = build_filtration(4).unwrap();
        for lambda in Partition::all(4) {
            assert!(annihilator_filtration(&lambda, &f4, 10, 1).unwrap().passed());
        }
    }

    #[test]
    fn generalized_examples() {
        let f = build_filtration(3).unwrap();
        let nat = generalized_annihilator_filtration(&natural_rep(3).unwrap(), &f).unwrap();
        assert!(nat.passed());
        assert_eq!(nat.dims, vec![3, 2, 1, 0]);
        let module = SpechtModule::new(&p("2,1")).unwrap();
        let sp = generalized_annihilator_filtration(&specht_rep(&module).unwrap(), &f).unwrap();
        assert_eq!(sp.dims, annihilator_filtration(&p("2,1"), &f, 0, 0).unwrap().dims);
        for n in 1..=4 {
            let f = build_filtration(n).unwrap();
            let reg = generalized_annihilator_filtration(&regular_rep(n).unwrap(), &f).unwrap();
            assert!(reg.passed());
            let drops: Vec<usize> = reg.stages.iter().map(|s| s.drop).collect();
            let ranks: Vec<usize> = (1..=f.len()).map(|i| f.rank(i) - f.rank(i - 1)).collect();
            assert_eq!(drops, ranks);
        }
    }

    #[test]
    fn trivial_eigenvalue_matches() {
        let weights = w(&[2, -1, 3, 0]);
        let pred = predict_spectrum(&p("4"), &weights).unwrap();
        assert_eq!(pred.entries[0].omega, trivial_eigenvalue(&weights));
    }
}
