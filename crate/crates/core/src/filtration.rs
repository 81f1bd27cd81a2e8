//! The Fibonacci filtration `F_0 ⊆ F_1 ⊆ ⋯ ⊆ F_{f_{n+1}} = Q[S_n]`, where
//! `F_i = F(Q_1) + ⋯ + F(Q_i)` and `F(I)` is the subspace fixed by right
//! multiplication with every `s_j`, `j ∈ I'`.
//!
//! Group-algebra vectors are sparse over the lexicographic basis of `S_n`.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::{index, SliceRandom};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::combinat::{factorial, gap_decomposition, m_value, non_shadow, enumerate_lacunar, GapDecomposition, LacunarSet, Partition};
use crate::error::{invalid, Error, Result};
use crate::exactlin::{EchelonBasis, Matrix, Rational, SparseVec};
use crate::groupalg::{cyc, GroupAlgebraElement, Permutation, SymmetricGroup};
use crate::reps::{character, induction_product, reflection_quotient, trivial_rep};
use crate::symfunc::{mn_character, z_of_lacunar};

/// Maximal runs of positions joined by the generators `s_j`, `j ∈ I'`.
fn position_blocks(n: usize, shadowless: &[usize]) -> Vec<std::ops::Range<usize>> {
    let mut blocks = Vec::new();
    let mut start = 1;
    for pos in 1..=n {
        if !shadowless.contains(&pos) {
            blocks.push(start..pos + 1);
            start = pos + 1;
        }
    }
    blocks
}

/// `F(I)` with its basis of left-coset orbit sums `Σ_{σ ∈ τΓ} σ`,
/// `Γ = ⟨s_j : j ∈ I'⟩`.
#[derive(Clone, Debug)]
pub struct FSpace {
    n: usize,
    subset: Vec<usize>,
    non_shadow: Vec<usize>,
    young_subgroup_order: u128,
    /// Each orbit as sorted lexicographic ranks; orbits sorted by their
    /// smallest member.
    orbits: Vec<Vec<usize>>,
}

pub fn f_space(n: usize, subset: &[usize]) -> Result<FSpace> {
    if let Some(bad) = subset.iter().find(|&&x| x == 0 || x > n) {
        return Err(invalid(format!("{bad} is not in [1, {n}]")));
    }
    let shadowless = non_shadow(n, subset);
    let blocks = position_blocks(n, &shadowless);
    let young_subgroup_order = blocks.iter().map(|b| factorial(b.len())).product();
    let mut by_rep: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (rank, sigma) in SymmetricGroup::new(n).elements().iter().enumerate() {
        let mut canon = sigma.images();
        for b in &blocks {
            canon[b.start - 1..b.end - 1].sort_unstable();
        }
        by_rep.entry(canon).or_default().push(rank);
    }
    let mut sorted = subset.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    Ok(FSpace { n, subset: sorted, non_shadow: shadowless, young_subgroup_order, orbits: by_rep.into_values().collect() })
}

impl FSpace {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    pub fn non_shadow(&self) -> &[usize] {
        &self.non_shadow
    }

    pub fn young_subgroup_order(&self) -> u128 {
        self.young_subgroup_order
    }

    pub fn dim(&self) -> usize {
        self.orbits.len()
    }

    pub fn orbit(&self, k: usize) -> &[usize] {
        &self.orbits[k]
    }

    pub fn orbit_sparse(&self, k: usize) -> SparseVec {
        self.orbits[k].iter().map(|&r| (r, Rational::one())).collect()
    }

    pub fn basis(&self) -> Vec<GroupAlgebraElement> {
        (0..self.dim()).map(|k| GroupAlgebraElement::from_sparse(self.n, &self.orbit_sparse(k))).collect()
    }

    /// Every orbit sum is fixed by right multiplication with each `s_j`, `j ∈ I'`.
    pub fn is_right_fixed(&self) -> bool {
        self.non_shadow.iter().all(|&j| {
            let s = GroupAlgebraElement::from_perm(Permutation::simple(self.n, j).expect("j < n"));
            self.basis().iter().all(|v| v.mul(&s).expect("same n") == *v)
        })
    }
}

/// Right multiplication of a sparse vector by a permutation.
fn right_mul(v: &[(usize, Rational)], sigma: &Permutation, n: usize) -> SparseVec {
    let mut out: SparseVec =
        v.iter().map(|(r, c)| (Permutation::from_lex_rank(n, *r).compose(sigma).lex_rank(), c.clone())).collect();
    out.sort_by_key(|(r, _)| *r);
    out
}

/// Left multiplication of a sparse vector by a permutation.
fn left_mul(v: &[(usize, Rational)], sigma: &Permutation, n: usize) -> SparseVec {
    let mut out: SparseVec =
        v.iter().map(|(r, c)| (sigma.compose(&Permutation::from_lex_rank(n, *r)).lex_rank(), c.clone())).collect();
    out.sort_by_key(|(r, _)| *r);
    out
}

/// Sum of sparse vectors scaled by coefficients.
fn combine(n_basis: usize, terms: impl IntoIterator<Item = (Rational, SparseVec)>) -> SparseVec {
    let mut dense = vec![Rational::zero(); n_basis];
    for (c, v) in terms {
        for (i, x) in v {
            dense[i] += &c * &x;
        }
    }
    crate::exactlin::sparse_from_dense(&dense)
}

/// `v · t_ℓ`.
fn right_mul_shuffle(v: &[(usize, Rational)], cycles: &[Permutation], n: usize, n_basis: usize) -> SparseVec {
    combine(n_basis, cycles.iter().map(|c| (Rational::one(), right_mul(v, c, n))))
}

fn shuffle_cycles(n: usize, ell: usize) -> Vec<Permutation> {
    (ell..=n).map(|top| cyc(n, &(ell..=top).collect::<Vec<_>>()).expect("valid cycle")).collect()
}

/// `n! / (j_1! ⋯ j_m!) · Π_{k≥2} (j_k − 1)`.
pub fn rank_formula(gaps: &GapDecomposition) -> u128 {
    let multinomial = gaps.j_seq.iter().fold(factorial(gaps.n), |acc, &j| acc / factorial(j));
    gaps.j_seq[1..].iter().fold(multinomial, |acc, &j| acc * (j as u128 - 1))
}

#[derive(Clone, Debug)]
pub struct FibonacciFiltration {
    n: usize,
    order: Vec<LacunarSet>,
    spaces: Vec<FSpace>,
    echelon: EchelonBasis,
    /// `stage_end[i]` = rank of `F_i`; `stage_end[0] = 0`.
    stage_end: Vec<usize>,
}

pub fn build_filtration(n: usize) -> Result<FibonacciFiltration> {
    let order = enumerate_lacunar(n)?;
    let n_basis = factorial(n) as usize;
    let mut echelon = EchelonBasis::new(n_basis);
    let mut stage_end = vec![0];
    let mut spaces = Vec::with_capacity(order.len());
    for q in &order {
        let space = f_space(n, q.elements())?;
        for k in 0..space.dim() {
            if echelon.is_full() {
                break;
            }
            echelon.insert(&space.orbit_sparse(k))?;
        }
        stage_end.push(echelon.len());
        spaces.push(space);
    }
    if !echelon.is_full() {
        return Err(Error::Invariant(format!("filtration of Q[S_{n}] stops at rank {}", echelon.len())));
    }
    Ok(FibonacciFiltration { n, order, spaces, echelon, stage_end })
}

impl FibonacciFiltration {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of stages `f_{n+1}`.
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// `Q_i` for `i ∈ [1, f_{n+1}]`.
    pub fn q(&self, i: usize) -> &LacunarSet {
        &self.order[i - 1]
    }

    pub fn order(&self) -> &[LacunarSet] {
        &self.order
    }

    /// `F(Q_i)`.
    pub fn space(&self, i: usize) -> &FSpace {
        &self.spaces[i - 1]
    }

    /// Rank of `F_i`, `i ∈ [0, f_{n+1}]`.
    pub fn rank(&self, i: usize) -> usize {
        self.stage_end[i]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.stage_end[1..]
    }

    pub fn echelon(&self) -> &EchelonBasis {
        &self.echelon
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.len() {
            return Err(invalid(format!("stage {i} is not in [1, {}]", self.len())));
        }
        Ok(())
    }

    /// Echelon rows spanning `F_i` (stage rows are the last `subquotient_rank` of them).
    pub fn stage_rows(&self, i: usize) -> impl Iterator<Item = &SparseVec> {
        (0..self.stage_end[i]).map(|k| self.echelon.row(k))
    }

    /// Whether `v` lies in `F_i`.
    pub fn contains(&self, v: &[(usize, Rational)], i: usize) -> Result<bool> {
        self.echelon.contains(v, self.stage_end[i])
    }

    pub fn n_basis(&self) -> usize {
        self.echelon.dim()
    }
}

/// `rank(F_i) − rank(F_{i−1})`.
pub fn subquotient_rank(filt: &FibonacciFiltration, i: usize) -> Result<usize> {
    filt.check_index(i)?;
    Ok(filt.stage_end[i] - filt.stage_end[i - 1])
}

/// Membership outcome for one orbit sum `v` of `F(Q_i)`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct VectorCertificate {
    pub orbit: usize,
    /// `v·t_ℓ ∈ F_i`.
    pub stays: bool,
    /// `v·t_ℓ − m·v ∈ F_{i−1}`.
    pub drops: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct StabilityReport {
    pub stage: usize,
    pub ell: usize,
    pub m: usize,
    pub certificates: Vec<VectorCertificate>,
}

impl StabilityReport {
    pub fn passed(&self) -> bool {
        self.certificates.iter().all(|c| c.stays && c.drops)
    }
}

/// Checks `F_i·t_ℓ ⊆ F_i` and `F_i·(t_ℓ − m_{Q_i,ℓ}) ⊆ F_{i−1}` on the orbit
/// sums of `F(Q_i)`. Together with the same check at every earlier stage
/// this covers all of `F_i`.
pub fn verify_right_stability(filt: &FibonacciFiltration, i: usize, ell: usize) -> Result<StabilityReport> {
    filt.check_index(i)?;
    let n = filt.n;
    let m = m_value(n, filt.q(i).elements(), ell)?;
    let cycles = shuffle_cycles(n, ell);
    let space = filt.space(i);
    let mr = Rational::from(m);
    let certificates = (0..space.dim())
        .map(|k| {
            let v = space.orbit_sparse(k);
            let vt = right_mul_shuffle(&v, &cycles, n, filt.n_basis());
            let stays = filt.contains(&vt, i)?;
            let shifted = combine(filt.n_basis(), [(Rational::one(), vt), (-&mr, v)]);
            let drops = filt.contains(&shifted, i - 1)?;
            Ok(VectorCertificate { orbit: k, stays, drops })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(StabilityReport { stage: i, ell, m, certificates })
}

/// All `(i, ℓ)` pairs, or a seeded sample of `ceil(fraction · total)` of them.
pub fn stability_pairs(filt: &FibonacciFiltration, sample: Option<(f64, u64)>) -> Vec<(usize, usize)> {
    let all: Vec<(usize, usize)> = (1..=filt.len()).flat_map(|i| (1..=filt.n).map(move |l| (i, l))).collect();
    match sample {
        None => all,
        Some((fraction, seed)) => {
            let amount = ((all.len() as f64 * fraction).ceil() as usize).clamp(1, all.len());
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut picked = index::sample(&mut rng, all.len(), amount).into_vec();
            picked.sort_unstable();
            picked.into_iter().map(|k| all[k]).collect()
        }
    }
}

/// Runs [`verify_right_stability`] on the given pairs in parallel; results
/// come back in input order.
pub fn verify_stability_pairs(filt: &FibonacciFiltration, pairs: &[(usize, usize)]) -> Result<Vec<StabilityReport>> {
    pairs.par_iter().map(|&(i, l)| verify_right_stability(filt, i, l)).collect()
}

/// Cartesian product of all orderings of each list.
fn product_of_arrangements(lists: &[Vec<usize>]) -> Vec<Vec<Vec<usize>>> {
    let mut acc: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for list in lists {
        let perms = SymmetricGroup::new(list.len());
        let arrangements: Vec<Vec<usize>> =
            perms.elements().iter().map(|p| (1..=list.len()).map(|k| list[p.apply(k) - 1]).collect()).collect();
        acc = acc
            .into_iter()
            .flat_map(|prefix| {
                arrangements.iter().map(move |a| {
                    let mut next = prefix.clone();
                    next.push(a.clone());
                    next
                })
            })
            .collect();
    }
    acc
}

fn check_nabla_choice(gaps: &GapDecomposition, p: &[usize]) -> Result<()> {
    if p.len() + 1 != gaps.m() {
        return Err(invalid(format!("∇ needs {} anchor images, got {}", gaps.m() - 1, p.len())));
    }
    for (k, &pk) in p.iter().enumerate() {
        if !gaps.blocks[k + 1].contains(&pk) {
            return Err(invalid(format!("p_{} = {pk} is outside {:?}", k + 2, gaps.blocks[k + 1])));
        }
    }
    Ok(())
}

/// Permutations preserving every block `J_k` and sending `i_{k−1}` to `p_k`
/// for `k ≥ 2`.
fn nabla_support(gaps: &GapDecomposition, p: &[usize]) -> Vec<Permutation> {
    let n = gaps.n;
    // the free part of each block, and which positions it fills
    let mut free_positions = Vec::new();
    let mut free_values = Vec::new();
    for (k, block) in gaps.blocks.iter().enumerate() {
        if k == 0 {
            free_positions.push(block.clone().collect::<Vec<_>>());
            free_values.push(block.clone().collect::<Vec<_>>());
        } else {
            let anchor = block.start;
            free_positions.push(block.clone().filter(|&x| x != anchor).collect());
            free_values.push(block.clone().filter(|&x| x != p[k - 1]).collect());
        }
    }
    product_of_arrangements(&free_values)
        .into_iter()
        .map(|choice| {
            let mut images = vec![0; n];
            for (k, block) in gaps.blocks.iter().enumerate() {
                if k > 0 {
                    images[block.start - 1] = p[k - 1];
                }
                for (pos, val) in free_positions[k].iter().zip(&choice[k]) {
                    images[pos - 1] = *val;
                }
            }
            Permutation::from_images(&images).expect("block permutation")
        })
        .collect()
}

/// `∇_p` for a lacunar set; `p = (p_2, …, p_m)` with `p_k ∈ J_k`.
pub fn nabla(set: &LacunarSet, p: &[usize]) -> Result<GroupAlgebraElement> {
    let gaps = gap_decomposition(set);
    check_nabla_choice(&gaps, p)?;
    GroupAlgebraElement::sum_of(set.n(), nabla_support(&gaps, p))
}

fn nabla_choices(gaps: &GapDecomposition) -> Vec<Vec<usize>> {
    let mut acc: Vec<Vec<usize>> = vec![Vec::new()];
    for block in &gaps.blocks[1..] {
        acc = acc
            .into_iter()
            .flat_map(|prefix| {
                block.clone().map(move |x| {
                    let mut next = prefix.clone();
                    next.push(x);
                    next
                })
            })
            .collect();
    }
    acc
}

fn support_ranks(perms: &[Permutation]) -> BTreeSet<usize> {
    perms.iter().map(Permutation::lex_rank).collect()
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct NablaReport {
    pub stage: usize,
    pub q: Vec<usize>,
    /// `τ∇_p = ∇_{τp}` over all `p` and the checked block permutations `τ`.
    pub equivariance_checked: usize,
    pub equivariance_ok: bool,
    /// `A·∇_p = F(Q_i)` for every `p`.
    pub generates_checked: usize,
    pub generates_ok: bool,
    /// `Σ_{p_ℓ ∈ J_ℓ} ∇_p ∈ F_{i−1}` over all `ℓ` and remaining choices.
    pub sums_checked: usize,
    pub sums_ok: bool,
}

impl NablaReport {
    pub fn passed(&self) -> bool {
        self.equivariance_ok && self.generates_ok && self.sums_ok
    }
}

/// Block-preserving permutations of the gap decomposition; at most
/// `cap`, sampled with `seed` beyond that.
fn block_permutations(gaps: &GapDecomposition, cap: usize, seed: u64) -> Vec<Permutation> {
    let n = gaps.n;
    let total: u128 = gaps.j_seq.iter().map(|&j| factorial(j)).product();
    let lists: Vec<Vec<usize>> = gaps.blocks.iter().map(|b| b.clone().collect()).collect();
    let build = |choice: &[Vec<usize>]| {
        let mut images = vec![0; n];
        for (block, vals) in gaps.blocks.iter().zip(choice) {
            for (pos, v) in block.clone().zip(vals) {
                images[pos - 1] = *v;
            }
        }
        Permutation::from_images(&images).expect("block permutation")
    };
    if total <= cap as u128 {
        return product_of_arrangements(&lists).iter().map(|c| build(c)).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..cap)
        .map(|_| {
            let choice: Vec<Vec<usize>> = lists
                .iter()
                .map(|l| {
                    let mut l = l.clone();
                    l.shuffle(&mut rng);
                    l
                })
                .collect();
            build(&choice)
        })
        .collect()
}

pub fn verify_nabla_properties(filt: &FibonacciFiltration, i: usize, seed: u64) -> Result<NablaReport> {
    filt.check_index(i)?;
    let n = filt.n;
    let set = filt.q(i);
    let gaps = gap_decomposition(set);
    let choices = nabla_choices(&gaps);
    let supports: BTreeMap<Vec<usize>, Vec<Permutation>> =
        choices.iter().map(|p| (p.clone(), nabla_support(&gaps, p))).collect();

    let taus = block_permutations(&gaps, 10_000, seed);
    let mut equivariance_checked = 0;
    let mut equivariance_ok = true;
    for (p, support) in &supports {
        for tau in &taus {
            let moved: Vec<Permutation> = support.iter().map(|s| tau.compose(s)).collect();
            let tp: Vec<usize> = p.iter().map(|&x| tau.apply(x)).collect();
            equivariance_checked += 1;
            if support_ranks(&moved) != support_ranks(&supports[&tp]) {
                equivariance_ok = false;
            }
        }
    }

    let space = filt.space(i);
    let group = SymmetricGroup::new(n);
    let mut generates_ok = true;
    for support in supports.values() {
        let v: SparseVec = {
            let mut v: SparseVec = support.iter().map(|s| (s.lex_rank(), Rational::one())).collect();
            v.sort_by_key(|(r, _)| *r);
            v
        };
        let mut span = EchelonBasis::new(filt.n_basis());
        for sigma in group.elements() {
            if span.len() > space.dim() {
                break;
            }
            span.insert(&left_mul(&v, sigma, n))?;
        }
        let same_rank = span.len() == space.dim();
        let contains_space = (0..space.dim()).all(|k| span.contains(&space.orbit_sparse(k), span.len()).unwrap_or(false));
        generates_ok &= same_rank && contains_space;
    }

    let mut sums_checked = 0;
    let mut sums_ok = true;
    for ell in 1..gaps.m() {
        // every choice of the other coordinates, summed over p_ℓ ∈ J_ℓ
        let others: BTreeSet<Vec<usize>> = choices
            .iter()
            .map(|p| {
                let mut q = p.clone();
                q[ell - 1] = 0;
                q
            })
            .collect();
        for base in others {
            let terms = gaps.blocks[ell].clone().map(|x| {
                let mut p = base.clone();
                p[ell - 1] = x;
                let v: SparseVec = supports[&p].iter().map(|s| (s.lex_rank(), Rational::one())).collect();
                (Rational::one(), v)
            });
            let total = combine(filt.n_basis(), terms);
            sums_checked += 1;
            if !filt.contains(&total, i - 1)? {
                sums_ok = false;
            }
        }
    }

    Ok(NablaReport {
        stage: i,
        q: set.elements().to_vec(),
        equivariance_checked,
        equivariance_ok,
        generates_checked: supports.len(),
        generates_ok,
        sums_checked,
        sums_ok,
    })
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FixedSubspaceReport {
    pub stage: usize,
    pub q: Vec<usize>,
    /// `(i_k, dimension of the fixed subspace, all of it lies in F_{i−1})`.
    pub checks: Vec<(usize, usize, bool)>,
}

impl FixedSubspaceReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.2)
    }
}

/// For each `k ∈ [m−1]`: `{t ∈ F(Q_i) : t·s_{i_k} = t} ⊆ F_{i−1}`.
pub fn verify_fixed_subspace(filt: &FibonacciFiltration, i: usize) -> Result<FixedSubspaceReport> {
    filt.check_index(i)?;
    let n = filt.n;
    let set = filt.q(i);
    let space = filt.space(i);
    let nb = filt.n_basis();
    let mut checks = Vec::new();
    for &ik in set.elements() {
        let s = Permutation::simple(n, ik)?;
        // rows: O_c·s − O_c; the fixed subspace is the left kernel
        let diffs: Vec<Vec<Rational>> = (0..space.dim())
            .map(|c| {
                let o = space.orbit_sparse(c);
                let d = combine(nb, [(Rational::one(), right_mul(&o, &s, n)), (-Rational::one(), o)]);
                crate::exactlin::dense_from_sparse(&d, nb)
            })
            .collect();
        let kernel = Matrix::from_rows(diffs)?.transpose().nullspace();
        let mut ok = true;
        for a in &kernel {
            let t = combine(nb, a.iter().enumerate().map(|(c, x)| (x.clone(), space.orbit_sparse(c))));
            ok &= filt.contains(&t, i - 1)?;
        }
        checks.push((ik, kernel.len(), ok));
    }
    Ok(FixedSubspaceReport { stage: i, q: set.elements().to_vec(), checks })
}

/// Trace of left multiplication by a permutation of the given cycle type on
/// `F_i / F_{i−1}`.
pub fn subquotient_character(filt: &FibonacciFiltration, i: usize, cycle_type: &Partition) -> Result<Rational> {
    filt.check_index(i)?;
    if cycle_type.size() != filt.n {
        return Err(invalid(format!("cycle type {cycle_type} for S_{}", filt.n)));
    }
    let sigma = Permutation::of_cycle_type(cycle_type);
    let (lo, hi) = (filt.stage_end[i - 1], filt.stage_end[i]);
    let mut trace = Rational::zero();
    for r in lo..hi {
        let image = left_mul(filt.echelon.row(r), &sigma, filt.n);
        let red = filt.echelon.reduce(&image, hi)?;
        if !red.in_span() {
            return Err(Error::Invariant(format!("F_{i} is not stable under left multiplication")));
        }
        trace += &red.coeffs[r];
    }
    Ok(trace)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CharacterRow {
    pub cycle_type: Partition,
    pub subquotient: String,
    pub induction_product: String,
    pub schur_expansion: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CharacterReport {
    pub stage: usize,
    pub q: Vec<usize>,
    pub rows: Vec<CharacterRow>,
    pub passed: bool,
}

/// Compares the subquotient character with `H_{j_1} ∗ Z_{j_2} ∗ ⋯ ∗ Z_{j_m}`
/// and with `Σ_λ c_{Q_i}^λ χ^λ` on every cycle type.
pub fn verify_subquotient_characters(filt: &FibonacciFiltration, i: usize) -> Result<CharacterReport> {
    filt.check_index(i)?;
    let set = filt.q(i);
    let gaps = gap_decomposition(set);
    let mut factors = vec![trivial_rep(gaps.j_seq[0])];
    for &j in &gaps.j_seq[1..] {
        factors.push(reflection_quotient(j)?);
    }
    let product = induction_product(&factors)?;
    let z = z_of_lacunar(set)?;
    let mut rows = Vec::new();
    let mut passed = true;
    for ct in Partition::all(filt.n) {
        let sub = subquotient_character(filt, i, &ct)?;
        let ind = character(&product, &ct)?;
        let mut lr = 0i64;
        for (lambda, c) in z.terms() {
            lr += c * mn_character(lambda, &ct)?;
        }
        let lr = Rational::from_integer(lr);
        passed &= sub == ind && sub == lr;
        rows.push(CharacterRow {
            cycle_type: ct,
            subquotient: sub.to_pq_string(),
            induction_product: ind.to_pq_string(),
            schur_expansion: lr.to_pq_string(),
        });
    }
    Ok(CharacterReport { stage: i, q: set.elements().to_vec(), rows, passed })
}
