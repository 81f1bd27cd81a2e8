//! Representations of `S_n` given by matrices of the simple transpositions.

use std::collections::HashMap;

use serde::Serialize;

use crate::combinat::{factorial, Partition};
use crate::error::{check_dim, invalid, Error, Result};
use crate::exactlin::{Matrix, Rational};
use crate::groupalg::{Permutation, SymmetricGroup};
use crate::specht::SpechtModule;

/// `gens[i-1]` is the matrix of `s_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    n: usize,
    dim: usize,
    gens: Vec<Matrix>,
}

impl Representation {
    pub fn new(n: usize, dim: usize, gens: Vec<Matrix>) -> Result<Self> {
        check_dim(n.saturating_sub(1), gens.len())?;
        for g in &gens {
            check_dim(dim, g.rows())?;
            check_dim(dim, g.cols())?;
        }
        Ok(Representation { n, dim, gens })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.gens
    }

    pub fn generator(&self, i: usize) -> &Matrix {
        &self.gens[i - 1]
    }

    /// Matrix of `σ` via a reduced word.
    pub fn perm_matrix(&self, sigma: &Permutation) -> Result<Matrix> {
        check_dim(self.n, sigma.n())?;
        Ok(sigma
            .reduced_word()
            .iter()
            .fold(Matrix::identity(self.dim), |acc, &i| &acc * &self.gens[i - 1]))
    }

    /// Involutions, commuting distant generators and braid relations.
    pub fn satisfies_coxeter_relations(&self) -> bool {
        let id = Matrix::identity(self.dim);
        let k = self.gens.len();
        for i in 0..k {
            if &self.gens[i] * &self.gens[i] != id {
                return false;
            }
            for j in i + 1..k {
                let (a, b) = (&self.gens[i], &self.gens[j]);
                let ok = if j == i + 1 { &(a * b) * a == &(b * a) * b } else { a * b == b * a };
                if !ok {
                    return false;
                }
            }
        }
        true
    }
}

/// `H_p`: one-dimensional with every generator acting as 1.
pub fn trivial_rep(p: usize) -> Representation {
    Representation { n: p, dim: 1, gens: vec![Matrix::identity(1); p.saturating_sub(1)] }
}

fn swap_matrix(p: usize, i: usize) -> Matrix {
    let mut m = Matrix::identity(p);
    m.set(i - 1, i - 1, Rational::zero());
    m.set(i, i, Rational::zero());
    m.set(i - 1, i, Rational::one());
    m.set(i, i - 1, Rational::one());
    m
}

/// `N_p`: permutes coordinates.
pub fn natural_rep(p: usize) -> Result<Representation> {
    if p == 0 {
        return Err(invalid("natural representation needs p >= 1"));
    }
    Ok(Representation { n: p, dim: p, gens: (1..p).map(|i| swap_matrix(p, i)).collect() })
}

/// `Z_p = N_p / span(1,…,1)` in the basis of residues `ē_1, …, ē_{p-1}`.
/// A residue is read off as `(v_1 - v_p, …, v_{p-1} - v_p)`.
pub fn reflection_quotient(p: usize) -> Result<Representation> {
    if p == 0 {
        return Err(invalid("reflection quotient needs p >= 1"));
    }
    let d = p - 1;
    let reduce = |v: &[i64]| -> Vec<Rational> { (0..d).map(|k| Rational::from_integer(v[k] - v[d])).collect() };
    let gens = (1..p)
        .map(|i| {
            let s = Permutation::simple(p, i).expect("valid generator");
            let mut m = Matrix::zeros(d, d);
            for j in 1..=d {
                let mut e = vec![0i64; p];
                e[s.apply(j) - 1] = 1;
                for (r, c) in reduce(&e).into_iter().enumerate() {
                    m.set(r, j - 1, c);
                }
            }
            m
        })
        .collect();
    Ok(Representation { n: p, dim: d, gens })
}

/// `V*` in the dual basis; generators are involutions so this is the transpose.
pub fn dual_rep(r: &Representation) -> Representation {
    Representation { n: r.n, dim: r.dim, gens: r.gens.iter().map(Matrix::transpose).collect() }
}

/// `S^λ` as a generator-matrix representation.
pub fn specht_rep(module: &SpechtModule) -> Result<Representation> {
    let n = module.n();
    let gens = (1..n).map(|i| module.perm_matrix(&Permutation::simple(n, i)?)).collect::<Result<Vec<_>>>()?;
    Representation::new(n, module.dim(), gens)
}

/// `Q[S_n]` under left multiplication, basis in lexicographic order.
pub fn regular_rep(n: usize) -> Result<Representation> {
    let group = SymmetricGroup::new(n);
    let size = group.order();
    let mut gens = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let s = Permutation::simple(n, i)?;
        let mut m = Matrix::zeros(size, size);
        for (col, sigma) in group.elements().iter().enumerate() {
            m.set(s.compose(sigma).lex_rank(), col, Rational::one());
        }
        gens.push(m);
    }
    Representation::new(n, size, gens)
}

/// Block sizes of a parabolic subgroup `S_{n_1} × ⋯ × S_{n_k}` acting on
/// consecutive intervals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParabolicShape {
    blocks: Vec<usize>,
}

impl ParabolicShape {
    pub fn new(blocks: Vec<usize>) -> Self {
        ParabolicShape { blocks }
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().sum()
    }

    /// 0-based start offset of each block.
    pub fn offsets(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .scan(0, |acc, &b| {
                let start = *acc;
                *acc += b;
                Some(start)
            })
            .collect()
    }

    /// Block index of each position `1..=n`.
    fn block_of(&self) -> Vec<usize> {
        self.blocks.iter().enumerate().flat_map(|(k, &b)| std::iter::repeat_n(k, b)).collect()
    }

    /// Whether `s_i` lies in the parabolic subgroup.
    pub fn contains_simple(&self, i: usize) -> bool {
        let b = self.block_of();
        i >= 1 && i < b.len() && b[i - 1] == b[i]
    }

    pub fn index(&self) -> u128 {
        self.blocks.iter().fold(factorial(self.n()), |acc, &b| acc / factorial(b))
    }
}

/// A representation of a parabolic subgroup, by the matrices of the simple
/// transpositions it contains (keyed by their index in `S_n`).
#[derive(Clone, Debug)]
pub struct ParabolicRep {
    shape: ParabolicShape,
    dim: usize,
    gens: HashMap<usize, Matrix>,
}

impl ParabolicRep {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn shape(&self) -> &ParabolicShape {
        &self.shape
    }

    /// Matrix of a block-preserving permutation.
    pub fn perm_matrix(&self, h: &Permutation) -> Result<Matrix> {
        let mut acc = Matrix::identity(self.dim);
        for i in h.reduced_word() {
            let g = self
                .gens
                .get(&i)
                .ok_or_else(|| invalid(format!("{h} does not preserve the blocks {:?}", self.shape.blocks)))?;
            acc = &acc * g;
        }
        Ok(acc)
    }
}

/// `U_1 ⊗ ⋯ ⊗ U_k` as a representation of the parabolic subgroup; the first
/// factor is the slowest Kronecker index.
pub fn outer_tensor(reps: &[Representation], shape: &ParabolicShape) -> Result<ParabolicRep> {
    check_dim(shape.blocks.len(), reps.len())?;
    for (r, &b) in reps.iter().zip(&shape.blocks) {
        if r.n != b {
            return Err(invalid(format!("factor for S_{} placed on a block of size {b}", r.n)));
        }
    }
    let dims: Vec<usize> = reps.iter().map(|r| r.dim).collect();
    let dim = dims.iter().product();
    let mut gens = HashMap::new();
    for (k, (r, offset)) in reps.iter().zip(shape.offsets()).enumerate() {
        for local in 1..r.n {
            let mut m = Matrix::identity(1);
            for (f, &d) in dims.iter().enumerate() {
                let factor = if f == k { r.gens[local - 1].clone() } else { Matrix::identity(d) };
                m = m.kron(&factor);
            }
            gens.insert(offset + local, m);
        }
    }
    Ok(ParabolicRep { shape: shape.clone(), dim, gens })
}

/// Minimal-length representatives of `S_n / P`: permutations increasing on
/// every block, in lexicographic order.
pub fn coset_representatives(shape: &ParabolicShape) -> Vec<Permutation> {
    let n = shape.n();
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    fn rec(
        pos: usize,
        block_of: &[usize],
        images: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Permutation>,
    ) {
        let n = block_of.len();
        if pos == n {
            out.push(Permutation::from_images(images).expect("bijection"));
            return;
        }
        let floor = if pos > 0 && block_of[pos - 1] == block_of[pos] { images[pos - 1] + 1 } else { 1 };
        for x in floor..=n {
            if !used[x] {
                used[x] = true;
                images.push(x);
                rec(pos + 1, block_of, images, used, out);
                images.pop();
                used[x] = false;
            }
        }
    }
    rec(0, &shape.block_of(), &mut images, &mut used, &mut out);
    out
}

/// The coset representative of `g P` (sort `g` within each block).
fn minimal_representative(g: &Permutation, shape: &ParabolicShape) -> Permutation {
    let mut images = g.images();
    for (start, &b) in shape.offsets().iter().zip(&shape.blocks) {
        images[*start..start + b].sort_unstable();
    }
    Permutation::from_images(&images).expect("bijection")
}

/// `Ind_P^{S_n} V` on the basis `w_c ⊗ v`, cosets outermost.
pub fn induce(v: &ParabolicRep, shape: &ParabolicShape) -> Result<Representation> {
    if shape != &v.shape {
        return Err(invalid("induction shape differs from the representation's"));
    }
    let n = shape.n();
    let reps = coset_representatives(shape);
    let index: HashMap<&Permutation, usize> = reps.iter().enumerate().map(|(k, w)| (w, k)).collect();
    let d = v.dim;
    let total = reps.len() * d;
    let mut gens = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let s = Permutation::simple(n, i)?;
        let mut m = Matrix::zeros(total, total);
        for (c, w) in reps.iter().enumerate() {
            let g = s.compose(w);
            let w2 = minimal_representative(&g, shape);
            let h = w2.inverse().compose(&g);
            let block = v.perm_matrix(&h)?;
            let c2 = index[&w2];
            for r in 0..d {
                for col in 0..d {
                    let x = block.get(r, col);
                    if !x.is_zero() {
                        m.set(c2 * d + r, c * d + col, x.clone());
                    }
                }
            }
        }
        gens.push(m);
    }
    Representation::new(n, total, gens)
}

/// `U_1 ∗ U_2 ∗ ⋯ ∗ U_k = Ind(U_1 ⊗ ⋯ ⊗ U_k)`; block sizes are the factors' `n`.
pub fn induction_product(factors: &[Representation]) -> Result<Representation> {
    if factors.is_empty() {
        return Err(invalid("induction product of no factors"));
    }
    let shape = ParabolicShape::new(factors.iter().map(|r| r.n).collect());
    induce(&outer_tensor(factors, &shape)?, &shape)
}

/// Trace at a permutation of the given cycle type.
pub fn character(r: &Representation, cycle_type: &Partition) -> Result<Rational> {
    if cycle_type.size() != r.n {
        return Err(invalid(format!("cycle type {cycle_type} for S_{}", r.n)));
    }
    Ok(r.perm_matrix(&Permutation::of_cycle_type(cycle_type))?.trace())
}

/// Character values on every cycle type of `S_n`, in reverse lexicographic
/// order of the cycle type.
pub fn character_table_row(r: &Representation) -> Result<Vec<(Partition, Rational)>> {
    Partition::all(r.n).into_iter().map(|ct| Ok((ct.clone(), character(r, &ct)?))).collect()
}

/// Size of the conjugacy class with the given cycle type.
pub fn class_size(cycle_type: &Partition) -> u128 {
    let mut z: u128 = 1;
    let parts = cycle_type.parts();
    let mut k = 0;
    while k < parts.len() {
        let len = parts[k];
        let mult = parts[k..].iter().take_while(|&&x| x == len).count();
        z *= (len as u128).pow(mult as u32) * factorial(mult);
        k += mult;
    }
    factorial(cycle_type.size()) / z
}

/// `⟨χ, ψ⟩ = (1/n!) Σ_σ χ(σ) ψ(σ)` for real-valued class functions given on
/// all cycle types of `S_n`.
pub fn character_inner_product(n: usize, chi: impl Fn(&Partition) -> Rational, psi: impl Fn(&Partition) -> Rational) -> Rational {
    let total: Rational = Partition::all(n)
        .iter()
        .map(|ct| &(&chi(ct) * &psi(ct)) * &Rational::from_bigints(class_size(ct).into(), 1.into()))
        .sum();
    &total / &Rational::from_bigints(factorial(n).into(), 1.into())
}

/// Basis of `{X : X·R1(s_i) = R2(s_i)·X for all i}`; each `X` is
/// `dim R2 × dim R1`.
pub fn intertwiners(r1: &Representation, r2: &Representation) -> Result<Vec<Matrix>> {
    check_dim(r1.n, r2.n)?;
    let (d1, d2) = (r1.dim, r2.dim);
    let unknowns = d1 * d2;
    let var = |i: usize, k: usize| i * d1 + k;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (a, b) in r1.gens.iter().zip(&r2.gens) {
        for i in 0..d2 {
            for j in 0..d1 {
                // (X A)_{ij} - (B X)_{ij}
                let mut eq = vec![Rational::zero(); unknowns];
                for k in 0..d1 {
                    let x = a.get(k, j);
                    if !x.is_zero() {
                        eq[var(i, k)] += x;
                    }
                }
                for k in 0..d2 {
                    let x = b.get(i, k);
                    if !x.is_zero() {
                        eq[var(k, j)] -= x;
                    }
                }
                if eq.iter().any(|e| !e.is_zero()) {
                    rows.push(eq);
                }
            }
        }
    }
    let system = if rows.is_empty() { Matrix::zeros(0, unknowns) } else { Matrix::from_rows(rows)? };
    Ok(system
        .nullspace()
        .into_iter()
        .map(|v| {
            let mut x = Matrix::zeros(d2, d1);
            for i in 0..d2 {
                for k in 0..d1 {
                    x.set(i, k, v[var(i, k)].clone());
                }
            }
            x
        })
        .collect())
}

pub fn hom_dimension(r1: &Representation, r2: &Representation) -> Result<usize> {
    Ok(intertwiners(r1, r2)?.len())
}

/// Whether `x` conjugates `r1` into `r2`: `x·R1(s_i) = R2(s_i)·x` for all `i`,
/// with `x` invertible.
pub fn is_isomorphism(x: &Matrix, r1: &Representation, r2: &Representation) -> bool {
    x.rows() == r2.dim
        && x.cols() == r1.dim
        && x.inverse().is_some()
        && r1.gens.iter().zip(&r2.gens).all(|(a, b)| x * a == b * x)
}

/// Tabloid of shape `(p-1, 1)` with `i` alone in the second row.
fn hook_tabloid_index(module: &SpechtModule, i: usize) -> usize {
    module
        .tabloids()
        .iter()
        .position(|t| t.rows().get(1).is_some_and(|r| r == &[i]))
        .expect("every point has a tabloid")
}

/// `Z_p → S^{(p-1,1)}`, `ē_i ↦ {i} − (1/p) Σ_j {j}` where `{j}` is the
/// tabloid with `j` in the second row. Columns are images of `ē_1..ē_{p-1}`.
pub fn reflection_to_specht(p: usize) -> Result<Matrix> {
    if p < 2 {
        return Err(invalid("needs p >= 2"));
    }
    let module = SpechtModule::new(&Partition::new(vec![p - 1, 1])?)?;
    let m = module.tabloids().len();
    let avg = Rational::new(1, p as i64);
    let mut x = Matrix::zeros(p - 1, p - 1);
    for i in 1..p {
        let mut v = vec![-&avg; m];
        v[hook_tabloid_index(&module, i)] += Rational::one();
        for (r, c) in module.coords(&v)?.into_iter().enumerate() {
            x.set(r, i - 1, c);
        }
    }
    Ok(x)
}

/// `Z_p → (S^{(p-1,1)})*`, `ē_i ↦ (b ↦ coefficient of {i} in b)`, written in
/// the basis dual to the standard polytabloids.
pub fn reflection_to_specht_dual(p: usize) -> Result<Matrix> {
    if p < 2 {
        return Err(invalid("needs p >= 2"));
    }
    let module = SpechtModule::new(&Partition::new(vec![p - 1, 1])?)?;
    let poly = module.polytabloid_matrix();
    let mut x = Matrix::zeros(p - 1, p - 1);
    for i in 1..p {
        let t = hook_tabloid_index(&module, i);
        for j in 0..p - 1 {
            x.set(j, i - 1, poly.get(t, j).clone());
        }
    }
    Ok(x)
}

/// Outcome of the two explicit isomorphism checks for `Z_p`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ReflectionIsoReport {
    pub p: usize,
    pub characters_match_dual: bool,
    pub characters_match_specht: bool,
    pub dual_intertwiner_ok: bool,
    pub specht_intertwiner_ok: bool,
    pub hom_dim_dual: usize,
    pub hom_dim_specht: usize,
}

impl ReflectionIsoReport {
    pub fn passed(&self) -> bool {
        self.characters_match_dual
            && self.characters_match_specht
            && self.dual_intertwiner_ok
            && self.specht_intertwiner_ok
            && self.hom_dim_dual == 1
            && self.hom_dim_specht == 1
    }
}

pub fn verify_reflection_iso(p: usize) -> Result<ReflectionIsoReport> {
    let z = reflection_quotient(p)?;
    let s = specht_rep(&SpechtModule::new(&Partition::new(vec![p - 1, 1])?)?)?;
    let s_dual = dual_rep(&s);
    let same_chars = |a: &Representation, b: &Representation| -> Result<bool> {
        Ok(character_table_row(a)? == character_table_row(b)?)
    };
    if !z.satisfies_coxeter_relations() || !s.satisfies_coxeter_relations() {
        return Err(Error::Invariant(format!("Coxeter relations fail at p={p}")));
    }
    Ok(ReflectionIsoReport {
        p,
        characters_match_dual: same_chars(&z, &s_dual)?,
        characters_match_specht: same_chars(&z, &s)?,
        dual_intertwiner_ok: is_isomorphism(&reflection_to_specht_dual(p)?, &z, &s_dual),
        specht_intertwiner_ok: is_isomorphism(&reflection_to_specht(p)?, &z, &s),
        hom_dim_dual: hom_dimension(&z, &s_dual)?,
        hom_dim_specht: hom_dimension(&z, &s)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupalg::SymmetricGroup;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn basic_reps() {
        let h0 = trivial_rep(0);
        assert_eq!((h0.dim(), h0.generators().len()), (1, 0));
        let h3 = trivial_rep(3);
        assert!(h3.generators().iter().all(|g| g == &Matrix::identity(1)));
        assert_eq!(natural_rep(2).unwrap().generator(1), &Matrix::from_i64(&[&[0, 1], &[1, 0]]));
        assert_eq!(natural_rep(1).unwrap().dim(), 1);
        assert!(natural_rep(0).is_err());
        assert_eq!(reflection_quotient(2).unwrap().generator(1), &Matrix::from_i64(&[&[-1]]));
        assert_eq!(reflection_quotient(1).unwrap().dim(), 0);
        for p in 1..=7 {
            let z = reflection_quotient(p).unwrap();
            assert_eq!(z.dim(), p - 1);
            assert!(z.satisfies_coxeter_relations());
            assert!(natural_rep(p).unwrap().satisfies_coxeter_relations());
        }
    }

    #[test]
    fn characters() {
        for p in 1..=5 {
            let nat = natural_rep(p).unwrap();
            let z = reflection_quotient(p).unwrap();
            for ct in Partition::all(p) {
                let fixed = ct.parts().iter().filter(|&&x| x == 1).count() as i64;
                assert_eq!(character(&nat, &ct).unwrap(), q(fixed));
                assert_eq!(character(&z, &ct).unwrap(), q(fixed - 1));
                assert_eq!(character(&trivial_rep(p), &ct).unwrap(), q(1));
            }
        }
        assert!(character(&trivial_rep(3), &"2".parse().unwrap()).is_err());
    }

    #[test]
    fn dual_character_at_inverse() {
        let r = induction_product(&[natural_rep(2).unwrap(), reflection_quotient(3).unwrap()]).unwrap();
        let d = dual_rep(&r);
        assert_eq!(dual_rep(&d), r);
        for sigma in SymmetricGroup::new(5).elements().iter().step_by(11) {
            assert_eq!(d.perm_matrix(sigma).unwrap().trace(), r.perm_matrix(&sigma.inverse()).unwrap().trace());
        }
    }

    #[test]
    fn induction_examples() {
        let t = induce(&outer_tensor(&[trivial_rep(4)], &ParabolicShape::new(vec![4])).unwrap(), &ParabolicShape::new(vec![4])).unwrap();
        assert_eq!(t, trivial_rep(4));
        let shape = ParabolicShape::new(vec![3, 1]);
        let v = outer_tensor(&[trivial_rep(3), trivial_rep(1)], &shape).unwrap();
        assert_eq!(induce(&v, &shape).unwrap().dim(), 4);
        let reg2 = induction_product(&[trivial_rep(1), trivial_rep(1)]).unwrap();
        assert_eq!(reg2.dim(), 2);
        assert_eq!(character(&reg2, &"1,1".parse().unwrap()).unwrap(), q(2));
        assert_eq!(character(&reg2, &"2".parse().unwrap()).unwrap(), q(0));
        let single = reflection_quotient(4).unwrap();
        assert_eq!(induction_product(std::slice::from_ref(&single)).unwrap(), single);
        assert!(outer_tensor(&[trivial_rep(2)], &ParabolicShape::new(vec![3])).is_err());
    }

    #[test]
    fn induced_reps_are_representations() {
        let r = induction_product(&[trivial_rep(0), reflection_quotient(2).unwrap(), natural_rep(2).unwrap(), trivial_rep(1)]).unwrap();
        assert_eq!(r.dim(), 30 * 2);
        assert!(r.satisfies_coxeter_relations());
    }

    #[test]
    fn hom_dims() {
        let reg3 = induction_product(&[trivial_rep(1), trivial_rep(1), trivial_rep(1)]).unwrap();
        assert_eq!(reg3.dim(), 6);
        assert_eq!(hom_dimension(&reg3, &reg3).unwrap(), 6);
        let nat = natural_rep(3).unwrap();
        assert_eq!(hom_dimension(&trivial_rep(3), &nat).unwrap(), 1);
        assert!(hom_dimension(&trivial_rep(3), &trivial_rep(4)).is_err());
    }

    #[test]
    fn class_sizes_sum() {
        for n in 0..=7 {
            let s: u128 = Partition::all(n).iter().map(class_size).sum();
            assert_eq!(s, factorial(n));
        }
    }

    #[test]
    fn reflection_isomorphisms() {
        for p in 2..=5 {
            let rep = verify_reflection_iso(p).unwrap();
            assert!(rep.passed(), "{rep:?}");
        }
    }
}
