//! Symmetric functions in the Schur basis.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::combinat::{gap_decomposition, LacunarSet, Partition};
use crate::error::{invalid, Error, Result};

/// Finite integer combination of Schur functions.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, i64>,
}

impl SchurExpansion {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `s_∅ = 1`.
    pub fn one() -> Self {
        Self::schur(Partition::empty())
    }

    pub fn schur(lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, 1);
        SchurExpansion { terms }
    }

    /// `h_m = s_(m)`.
    pub fn h(m: usize) -> Self {
        Self::schur(Partition::row(m))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, i64)>) -> Self {
        let mut out = Self::zero();
        for (p, c) in terms {
            out.add_term(p, c);
        }
        out
    }

    pub fn add_term(&mut self, p: Partition, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(p.clone()).or_insert(0);
        *e = e.checked_add(c).expect("Schur coefficient overflow");
        if *e == 0 {
            self.terms.remove(&p);
        }
    }

    pub fn coeff(&self, p: &Partition) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.terms.iter().map(|(p, &c)| (p, c))
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

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    /// `Some(d)` if every term has size `d` (zero is homogeneous of any degree).
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut sizes = self.terms.keys().map(Partition::size);
        let first = sizes.next()?;
        sizes.all(|s| s == first).then_some(first)
    }

    pub fn sub(&self, other: &SchurExpansion) -> SchurExpansion {
        let mut out = self.clone();
        for (p, &c) in &other.terms {
            out.add_term(p.clone(), -c);
        }
        out
    }

    pub fn add(&self, other: &SchurExpansion) -> SchurExpansion {
        let mut out = self.clone();
        for (p, &c) in &other.terms {
            out.add_term(p.clone(), c);
        }
        out
    }
}

/// Adds every horizontal strip of size `m` to `lambda`.
fn horizontal_strips(lambda: &Partition, m: usize) -> Vec<Partition> {
    let rows = lambda.len() + 1;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(rows);
    fn rec(r: usize, rem: usize, lambda: &Partition, rows: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if r == rows {
            if rem == 0 {
                out.push(Partition::from_unsorted(cur.clone()));
            }
            return;
        }
        let base = lambda.part(r);
        // row r may grow up to the old length of row r-1
        let cap = if r == 0 { rem } else { (lambda.part(r - 1) - base).min(rem) };
        for add in (0..=cap).rev() {
            cur.push(base + add);
            rec(r + 1, rem - add, lambda, rows, cur, out);
            cur.pop();
        }
    }
    rec(0, m, lambda, rows, &mut cur, &mut out);
    out
}

/// `f · h_m` by the Pieri rule.
pub fn pieri_mul_h(f: &SchurExpansion, m: usize) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    for (lambda, &c) in &f.terms {
        for mu in horizontal_strips(lambda, m) {
            out.add_term(mu, c);
        }
    }
    out
}

/// `f · z_m` where `z_m = h_{m-1} h_1 - h_m = s_(m-1,1)`.
pub fn mul_z(f: &SchurExpansion, m: usize) -> Result<SchurExpansion> {
    if m <= 1 {
        return Err(invalid(format!("z_m needs m > 1, got {m}")));
    }
    Ok(pieri_mul_h(&pieri_mul_h(f, m - 1), 1).sub(&pieri_mul_h(f, m)))
}

/// `z_I = h_{j_1} · z_{j_2} ⋯ z_{j_m}` for the gap sequence of `I`.
pub fn z_of_lacunar(set: &LacunarSet) -> Result<SchurExpansion> {
    let gaps = gap_decomposition(set);
    let mut f = pieri_mul_h(&SchurExpansion::one(), gaps.j_seq[0]);
    for &j in &gaps.j_seq[1..] {
        f = mul_z(&f, j)?;
    }
    if !f.is_nonnegative() || f.homogeneous_degree() != Some(set.n()) {
        return Err(Error::Invariant(format!("z_I for I={set} is not a nonnegative degree-{} expansion", set.n())));
    }
    Ok(f)
}

/// Coefficient of `s_λ` in `z_I`.
pub fn c_coeff(set: &LacunarSet, lambda: &Partition) -> Result<u64> {
    if lambda.size() != set.n() {
        return Err(invalid(format!("|{lambda}| = {} but n = {}", lambda.size(), set.n())));
    }
    Ok(z_of_lacunar(set)?.coeff(lambda) as u64)
}

/// `χ^λ` at a permutation of the given cycle type, by rim-hook removal on
/// beta-numbers.
pub fn mn_character(lambda: &Partition, cycle_type: &Partition) -> Result<i64> {
    if lambda.size() != cycle_type.size() {
        return Err(invalid(format!("|{lambda}| != |{cycle_type}|")));
    }
    let len = lambda.len();
    let beta: Vec<usize> = (0..len).map(|i| lambda.part(i) + len - 1 - i).collect();
    Ok(mn_beta(beta, cycle_type.parts()))
}

fn mn_beta(beta: Vec<usize>, hooks: &[usize]) -> i64 {
    let Some((&r, rest)) = hooks.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let mut next = beta.clone();
        next[idx] = b - r;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_beta(next, rest);
    }
    total
}

/// `s(2,1) + 2 s(1,1,1)`.
impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (p, &c)) in self.terms.iter().rev().enumerate() {
            let sep = match (k, c < 0) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let mag = c.unsigned_abs();
            if mag == 1 {
                write!(f, "{sep}s({p})")?;
            } else {
                write!(f, "{sep}{mag} s({p})")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct TermJson<'a> {
    partition: &'a Partition,
    coeff: i64,
}

/// Array of `{partition, coeff}` in reverse lexicographic partition order.
impl Serialize for SchurExpansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (p, &c) in self.terms.iter().rev() {
            seq.serialize_element(&TermJson { partition: p, coeff: c })?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sx(terms: &[(&str, i64)]) -> SchurExpansion {
        SchurExpansion::from_terms(terms.iter().map(|(s, c)| (p(s), *c)))
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(pieri_mul_h(&sx(&[("1", 1)]), 1), sx(&[("2", 1), ("1,1", 1)]));
        let f = sx(&[("3,1", 2), ("2", -1)]);
        assert_eq!(pieri_mul_h(&f, 0), f);
        assert_eq!(
            pieri_mul_h(&sx(&[("2,1", 1)]), 2),
            sx(&[("4,1", 1), ("3,2", 1), ("3,1,1", 1), ("2,2,1", 1)])
        );
    }

    #[test]
    fn z_examples() {
        let one = SchurExpansion::one();
        assert_eq!(mul_z(&one, 2).unwrap(), sx(&[("1,1", 1)]));
        assert_eq!(mul_z(&one, 3).unwrap(), sx(&[("2,1", 1)]));
        assert_eq!(mul_z(&sx(&[("1,1", 1)]), 2).unwrap(), sx(&[("2,2", 1), ("2,1,1", 1), ("1,1,1,1", 1)]));
        assert!(mul_z(&one, 1).is_err());
        let lac = |e: &[usize]| LacunarSet::new(3, e).unwrap();
        assert_eq!(z_of_lacunar(&lac(&[])).unwrap(), sx(&[("3", 1)]));
        assert_eq!(z_of_lacunar(&lac(&[1])).unwrap(), sx(&[("2,1", 1)]));
        assert_eq!(z_of_lacunar(&lac(&[2])).unwrap(), sx(&[("2,1", 1), ("1,1,1", 1)]));
    }

    #[test]
    fn c_examples() {
        for n in 1..=5 {
            let empty = LacunarSet::empty(n);
            for lambda in Partition::all(n) {
                let expect = u64::from(lambda == Partition::row(n));
                assert_eq!(c_coeff(&empty, &lambda).unwrap(), expect);
            }
        }
        let two = LacunarSet::new(3, &[2]).unwrap();
        assert_eq!(c_coeff(&two, &p("1,1,1")).unwrap(), 1);
        assert_eq!(c_coeff(&LacunarSet::new(3, &[1]).unwrap(), &p("3")).unwrap(), 0);
        assert!(c_coeff(&two, &p("2,2")).is_err());
    }

    #[test]
    fn mn_examples() {
        for n in 1..=6 {
            for ct in Partition::all(n) {
                assert_eq!(mn_character(&Partition::row(n), &ct).unwrap(), 1);
            }
        }
        assert_eq!(mn_character(&p("1,1,1"), &p("2,1")).unwrap(), -1);
        assert_eq!(mn_character(&p("2,1"), &p("1,1,1")).unwrap(), 2);
        assert_eq!(mn_character(&p("2,1"), &p("3")).unwrap(), -1);
        assert!(mn_character(&p("2,1"), &p("2")).is_err());
    }

    #[test]
    fn json_and_display() {
        let f = sx(&[("2,1", 1), ("1,1,1", 2)]);
        assert_eq!(f.to_string(), "s(2,1) + 2 s(1,1,1)");
        let j = serde_json::to_string(&f).unwrap();
        assert_eq!(j, r#"[{"partition":[2,1],"coeff":1},{"partition":[1,1,1],"coeff":2}]"#);
    }
}
