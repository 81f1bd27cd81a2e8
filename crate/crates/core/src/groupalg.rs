//! Permutations of `[n]` and the group algebra `Q[S_n]`.
//!
//! Products compose right to left: `(πσ)(i) = π(σ(i))`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::combinat::{factorial, Partition};
use crate::error::{check_dim, invalid, Error, Result};
use crate::exactlin::{Rational, SparseVec};

/// A bijection of `[n]` in one-line notation. Ordered lexicographically by
/// its image sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n < 256, "n must be below 256");
        Permutation { images: (1..=n as u8).collect() }
    }

    /// From 1-based images `σ(1), ..., σ(n)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n >= 256 {
            return Err(invalid("n must be below 256"));
        }
        let mut seen = vec![false; n + 1];
        for &x in images {
            if x == 0 || x > n || seen[x] {
                return Err(invalid(format!("{images:?} is not a permutation of [{n}]")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images: images.iter().map(|&x| x as u8).collect() })
    }

    /// The simple transposition `s_i = cyc_{i,i+1}`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(invalid(format!("s_{i} does not exist in S_{n}")));
        }
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `σ(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &x)| x as usize == k + 1)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.n(), other.n());
        Permutation { images: other.images.iter().map(|&x| self.images[x as usize - 1]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (k, &x) in self.images.iter().enumerate() {
            inv[x as usize - 1] = (k + 1) as u8;
        }
        Permutation { images: inv }
    }

    /// `self · s_i`: swaps positions `i` and `i+1`.
    pub fn mul_simple_right(&self, i: usize) -> Permutation {
        let mut p = self.clone();
        p.images.swap(i - 1, i);
        p
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize - 1;
                len += 1;
            }
            lens.push(len);
        }
        Partition::from_unsorted(lens)
    }

    pub fn inversions(&self) -> usize {
        let v = &self.images;
        (0..v.len()).map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count()).sum()
    }

    pub fn sign(&self) -> i64 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// A reduced word `[i_1, ..., i_k]` with `self = s_{i_1} s_{i_2} ⋯ s_{i_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut cur = self.clone();
        let mut word = Vec::new();
        while let Some(i) = (1..cur.n()).find(|&i| cur.images[i - 1] > cur.images[i]) {
            cur = cur.mul_simple_right(i);
            word.push(i);
        }
        word.reverse();
        word
    }

    /// Position in the lexicographic listing of `S_n` (Lehmer code).
    pub fn lex_rank(&self) -> usize {
        let n = self.n();
        let mut rank = 0;
        for i in 0..n {
            let smaller = (i + 1..n).filter(|&j| self.images[j] < self.images[i]).count();
            rank = rank * (n - i) + smaller;
        }
        rank
    }

    pub fn from_lex_rank(n: usize, mut rank: usize) -> Permutation {
        let mut digits = vec![0; n];
        for i in (0..n).rev() {
            let base = n - i;
            digits[i] = rank % base;
            rank /= base;
        }
        let mut pool: Vec<u8> = (1..=n as u8).collect();
        Permutation { images: digits.into_iter().map(|d| pool.remove(d)).collect() }
    }

    /// A fixed permutation with the given cycle type: consecutive cycles
    /// `(1 2 .. a)(a+1 .. a+b)...`.
    pub fn of_cycle_type(cycle_type: &Partition) -> Permutation {
        let n = cycle_type.size();
        let mut images = vec![0u8; n];
        let mut start = 0;
        for &len in cycle_type.parts() {
            for k in 0..len {
                images[start + k] = (start + (k + 1) % len + 1) as u8;
            }
            start += len;
        }
        Permutation { images }
    }
}

/// The cycle `i_1 → i_2 → ⋯ → i_k → i_1`; a single point gives the identity.
pub fn cyc(n: usize, points: &[usize]) -> Result<Permutation> {
    let mut p = Permutation::identity(n);
    let mut seen = vec![false; n + 1];
    for &x in points {
        if x == 0 || x > n || seen[x] {
            return Err(invalid(format!("cycle points {points:?} must be distinct elements of [{n}]")));
        }
        seen[x] = true;
    }
    for (k, &x) in points.iter().enumerate() {
        p.images[x - 1] = points[(k + 1) % points.len()] as u8;
    }
    Ok(p)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let images = inner
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| t.trim().parse::<usize>().map_err(|_| invalid(format!("bad permutation {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(&images)
    }
}

/// One-line notation string.
impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// All of `S_n` in lexicographic order, indexable both ways.
#[derive(Clone, Debug)]
pub struct SymmetricGroup {
    n: usize,
    elements: Vec<Permutation>,
}

impl SymmetricGroup {
    pub fn new(n: usize) -> Self {
        let order = factorial(n) as usize;
        SymmetricGroup { n, elements: (0..order).map(|r| Permutation::from_lex_rank(n, r)).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn get(&self, idx: usize) -> &Permutation {
        &self.elements[idx]
    }

    pub fn index_of(&self, p: &Permutation) -> usize {
        p.lex_rank()
    }
}

/// Sparse element of `Q[S_n]` with terms in lexicographic permutation order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupAlgebraElement {
    n: usize,
    terms: BTreeMap<Permutation, Rational>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::from_perm(Permutation::identity(n))
    }

    pub fn from_perm(p: Permutation) -> Self {
        let n = p.n();
        let mut terms = BTreeMap::new();
        terms.insert(p, Rational::one());
        GroupAlgebraElement { n, terms }
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Permutation, Rational)>) -> Result<Self> {
        let mut out = Self::zero(n);
        for (p, c) in terms {
            check_dim(n, p.n())?;
            out.add_term(p, &c);
        }
        Ok(out)
    }

    /// Sum of the given permutations with coefficient 1 each.
    pub fn sum_of(n: usize, perms: impl IntoIterator<Item = Permutation>) -> Result<Self> {
        Self::from_terms(n, perms.into_iter().map(|p| (p, Rational::one())))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, p: Permutation, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&p) {
            Some(e) => {
                *e += c;
                if e.is_zero() {
                    self.terms.remove(&p);
                }
            }
            None => {
                self.terms.insert(p, c.clone());
            }
        }
    }

    pub fn coeff(&self, p: &Permutation) -> Rational {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        GroupAlgebraElement { n: self.n, terms: self.terms.iter().map(|(p, x)| (p.clone(), x * c)).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_dim(self.n, other.n)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Bilinear extension of composition.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_dim(self.n, other.n)?;
        let mut out = Self::zero(self.n);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                out.add_term(p.compose(q), &(a * b));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(self.n), |acc, _| acc.mul(self).expect("same n"))
    }

    /// Coordinates in the lexicographic basis of `S_n`.
    pub fn to_sparse(&self) -> SparseVec {
        let mut v: SparseVec = self.terms.iter().map(|(p, c)| (p.lex_rank(), c.clone())).collect();
        v.sort_by_key(|(i, _)| *i);
        v
    }

    pub fn from_sparse(n: usize, v: &[(usize, Rational)]) -> Self {
        let mut out = Self::zero(n);
        for (i, c) in v {
            out.add_term(Permutation::from_lex_rank(n, *i), c);
        }
        out
    }
}

/// `t_ℓ = cyc_ℓ + cyc_{ℓ,ℓ+1} + ⋯ + cyc_{ℓ,…,n}`.
pub fn t_shuffle(n: usize, ell: usize) -> Result<GroupAlgebraElement> {
    if ell == 0 || ell > n {
        return Err(invalid(format!("t_{ell} is undefined for n = {n}")));
    }
    let cycles = (ell..=n).map(|top| cyc(n, &(ell..=top).collect::<Vec<_>>())).collect::<Result<Vec<_>>>()?;
    GroupAlgebraElement::sum_of(n, cycles)
}

/// `ω_1 t_1 + ⋯ + ω_n t_n`.
pub fn ocs(n: usize, weights: &[Rational]) -> Result<GroupAlgebraElement> {
    check_dim(n, weights.len())?;
    let mut out = GroupAlgebraElement::zero(n);
    for (k, w) in weights.iter().enumerate() {
        if !w.is_zero() {
            out = out.add(&t_shuffle(n, k + 1)?.scale(w))?;
        }
    }
    Ok(out)
}

#[derive(Serialize)]
struct TermJson<'a> {
    perm: &'a Permutation,
    coeff: String,
}

/// Array of `{perm, coeff}` with `coeff` as `"p/q"`.
impl Serialize for GroupAlgebraElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (p, c) in &self.terms {
            seq.serialize_element(&TermJson { perm: p, coeff: c.to_pq_string() })?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn cycles() {
        assert!(cyc(3, &[2]).unwrap().is_identity());
        assert_eq!(cyc(3, &[1, 2, 3]).unwrap(), perm("[2,3,1]"));
        assert_eq!(cyc(4, &[2, 4]).unwrap(), perm("[1,4,3,2]"));
        assert!(cyc(3, &[1, 1]).is_err());
        assert!(cyc(3, &[4]).is_err());
    }

    #[test]
    fn composition_is_right_to_left() {
        // s_1 s_2 sends 3 -> 2 -> 1
        let s1 = Permutation::simple(3, 1).unwrap();
        let s2 = Permutation::simple(3, 2).unwrap();
        assert_eq!(s1.compose(&s2).apply(3), 1);
        assert_eq!(s1.compose(&s2), perm("[2,3,1]"));
    }

    #[test]
    fn shuffles() {
        assert_eq!(t_shuffle(4, 4).unwrap(), GroupAlgebraElement::one(4));
        let t2 = t_shuffle(3, 2).unwrap();
        assert_eq!(t2.len(), 2);
        assert_eq!(t2.coeff(&cyc(3, &[2, 3]).unwrap()), Rational::one());
        let t1 = t_shuffle(3, 1).unwrap();
        assert_eq!(t1.len(), 3);
        assert!(t_shuffle(3, 0).is_err());
        let w = |v: &[i64]| v.iter().map(|&x| Rational::from_integer(x)).collect::<Vec<_>>();
        assert_eq!(ocs(3, &w(&[0, 0, 1])).unwrap(), GroupAlgebraElement::one(3));
        assert_eq!(ocs(3, &w(&[1, 0, 0])).unwrap(), t1);
        let all = ocs(3, &w(&[1, 1, 1])).unwrap();
        assert_eq!(all.len(), 4);
        assert_eq!(all.coeff(&Permutation::identity(3)), Rational::from_integer(3));
        assert!(ocs(3, &w(&[1, 1])).is_err());
    }

    #[test]
    fn mul_examples() {
        let t1 = t_shuffle(3, 1).unwrap();
        assert_eq!(t1.mul(&GroupAlgebraElement::one(3)).unwrap(), t1);
        let s1 = GroupAlgebraElement::from_perm(Permutation::simple(3, 1).unwrap());
        assert_eq!(s1.mul(&s1).unwrap(), GroupAlgebraElement::one(3));
        let t2 = t_shuffle(3, 2).unwrap();
        let comm = t1.mul(&t2).unwrap().sub(&t2.mul(&t1).unwrap()).unwrap();
        assert!(!comm.is_zero());
        assert!(comm.mul(&comm).unwrap().is_zero());
        assert!(t1.mul(&GroupAlgebraElement::one(4)).is_err());
    }

    #[test]
    fn commutators_nilpotent() {
        for n in 2..=6 {
            for i in 1..=n {
                for j in i + 1..=n {
                    let (a, b) = (t_shuffle(n, i).unwrap(), t_shuffle(n, j).unwrap());
                    let c = a.mul(&b).unwrap().sub(&b.mul(&a).unwrap()).unwrap();
                    assert!((1..=n).any(|e| c.pow(e).is_zero()), "[t_{i}, t_{j}] in n={n}");
                }
            }
        }
    }

    #[test]
    fn json() {
        let e = t_shuffle(2, 1).unwrap();
        assert_eq!(
            serde_json::to_string(&e).unwrap(),
            r#"[{"perm":"[1,2]","coeff":"1/1"},{"perm":"[2,1]","coeff":"1/1"}]"#
        );
    }

    fn any_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((1..=n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Permutation::from_images(&v).unwrap())
    }

    fn sparse_element(n: usize) -> impl Strategy<Value = GroupAlgebraElement> {
        proptest::collection::vec((any_perm(n), -3i64..=3), 0..5).prop_map(move |ts| {
            GroupAlgebraElement::from_terms(n, ts.into_iter().map(|(p, c)| (p, Rational::from_integer(c)))).unwrap()
        })
    }

    proptest! {
        #[test]
        fn mul_associative((a, b, c) in (1usize..=6).prop_flat_map(|n| (sparse_element(n), sparse_element(n), sparse_element(n)))) {
            let lhs = a.mul(&b).unwrap().mul(&c).unwrap();
            let rhs = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn lex_rank_roundtrip(p in (1usize..=7).prop_flat_map(any_perm)) {
            prop_assert_eq!(Permutation::from_lex_rank(p.n(), p.lex_rank()), p.clone());
            let word = p.reduced_word();
            prop_assert_eq!(word.len(), p.inversions());
            let mut acc = Permutation::identity(p.n());
            for &i in &word {
                acc = acc.mul_simple_right(i);
            }
            prop_assert_eq!(acc, p.clone());
            prop_assert_eq!(Permutation::of_cycle_type(&p.cycle_type()).cycle_type(), p.cycle_type());
        }
    }

    #[test]
    fn lex_order_matches_rank() {
        let g = SymmetricGroup::new(4);
        assert!(g.elements().windows(2).all(|w| w[0] < w[1]));
        assert_eq!(g.order(), 24);
    }
}
