//! Lacunar sets, gap decompositions, partitions and tableau counts.

use std::collections::HashMap;
use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// A subset of `[n-1]` without two consecutive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LacunarSet {
    n: usize,
    elements: Vec<usize>,
}

impl LacunarSet {
    /// Validates and sorts `elements`.
    pub fn new(n: usize, elements: &[usize]) -> Result<Self> {
        if n == 0 {
            return Err(invalid("n must be positive"));
        }
        let mut e = elements.to_vec();
        e.sort_unstable();
        if let Some(&bad) = e.iter().find(|&&x| x == 0 || x >= n) {
            return Err(invalid(format!("{bad} is not in [1, {}]", n - 1)));
        }
        if let Some(w) = e.windows(2).find(|w| w[1] <= w[0] + 1) {
            return Err(invalid(format!("{{{}, {}}} are not lacunar", w[0], w[1])));
        }
        Ok(LacunarSet { n, elements: e })
    }

    pub fn empty(n: usize) -> Self {
        LacunarSet { n, elements: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn sum(&self) -> usize {
        self.elements.iter().sum()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

impl fmt::Display for LacunarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_set(&self.elements))
    }
}

/// `{2,5}` style rendering; `{}` for the empty set.
pub fn fmt_set(elements: &[usize]) -> String {
    let parts: Vec<String> = elements.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

/// All lacunar subsets of `[n-1]`, by increasing sum, ties broken
/// lexicographically on the increasing element sequence.
pub fn enumerate_lacunar(n: usize) -> Result<Vec<LacunarSet>> {
    if n == 0 {
        return Err(invalid("n must be positive"));
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(next: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        for x in next..n {
            cur.push(x);
            rec(x + 2, n, cur, out);
            cur.pop();
        }
    }
    rec(1, n, &mut cur, &mut out);
    out.sort_by(|a, b| {
        let (sa, sb): (usize, usize) = (a.iter().sum(), b.iter().sum());
        sa.cmp(&sb).then_with(|| a.cmp(b))
    });
    Ok(out.into_iter().map(|elements| LacunarSet { n, elements }).collect())
}

/// `{0} ∪ I ∪ {n+1}`, sorted.
pub fn enclosure(n: usize, subset: &[usize]) -> Vec<usize> {
    let mut e: Vec<usize> = std::iter::once(0)
        .chain(subset.iter().copied())
        .chain(std::iter::once(n + 1))
        .collect();
    e.sort_unstable();
    e.dedup();
    e
}

fn check_subset(n: usize, subset: &[usize]) -> Result<()> {
    match subset.iter().find(|&&x| x == 0 || x > n) {
        Some(bad) => Err(invalid(format!("{bad} is not in [1, {n}]"))),
        None => Ok(()),
    }
}

/// Distance from `ell` up to the nearest element of the enclosure of `subset`.
pub fn m_value(n: usize, subset: &[usize], ell: usize) -> Result<usize> {
    check_subset(n, subset)?;
    if ell == 0 || ell > n {
        return Err(invalid(format!("index {ell} is not in [1, {n}]")));
    }
    let next = subset.iter().copied().filter(|&x| x >= ell).min().unwrap_or(n + 1);
    Ok(next - ell)
}

/// `(m_{I,1}, ..., m_{I,n})`.
pub fn m_vector(n: usize, subset: &[usize]) -> Result<Vec<usize>> {
    (1..=n).map(|ell| m_value(n, subset, ell)).collect()
}

/// `[n-1] \ (I ∪ (I-1))`: indices `i` with neither `i` nor `i+1` in `I`.
pub fn non_shadow(n: usize, subset: &[usize]) -> Vec<usize> {
    (1..n).filter(|i| !subset.contains(i) && !subset.contains(&(i + 1))).collect()
}

/// Gap data of a lacunar set. `blocks[k]` is `i_{k-1} .. i_k` (half-open), so
/// the first block may be empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapDecomposition {
    pub n: usize,
    pub i_seq: Vec<usize>,
    pub j_seq: Vec<usize>,
    pub blocks: Vec<Range<usize>>,
}

impl GapDecomposition {
    /// Number of gaps `m`.
    pub fn m(&self) -> usize {
        self.i_seq.len()
    }

    /// `i_{k}` with `i_0 = 1`, for `k` in `0..=m`.
    pub fn anchor(&self, k: usize) -> usize {
        if k == 0 {
            1
        } else {
            self.i_seq[k - 1]
        }
    }
}

pub fn gap_decomposition(set: &LacunarSet) -> GapDecomposition {
    let n = set.n;
    let i_seq: Vec<usize> = set.elements.iter().copied().chain(std::iter::once(n + 1)).collect();
    let mut prev = 1;
    let mut j_seq = Vec::with_capacity(i_seq.len());
    let mut blocks = Vec::with_capacity(i_seq.len());
    for &i in &i_seq {
        j_seq.push(i - prev);
        blocks.push(prev..i);
        prev = i;
    }
    GapDecomposition { n, i_seq, j_seq, blocks }
}

/// A lacunar `J` with `sum J < sum I` and `J' ⊆ I' ∪ {j}`.
///
/// `j` is swapped for `j-1` (or dropped when `j = 1`), giving a set `K`; then
/// `J` is the lacunar set of least sum (lexicographically first among ties)
/// whose shadow covers the shadow of `K`, which forces `J' ⊆ K'`.
pub fn reduction_witness(n: usize, subset: &[usize], j: usize) -> Result<LacunarSet> {
    check_subset(n, subset)?;
    if !subset.contains(&j) {
        return Err(invalid(format!("{j} is not an element of {}", fmt_set(subset))));
    }
    let mut k: Vec<usize> = subset.iter().copied().filter(|&x| x != j).collect();
    if j > 1 {
        k.push(j - 1);
    }
    k.sort_unstable();
    k.dedup();
    let witness = lacunarize(n, &k);
    let w = LacunarSet::new(n, &witness)?;
    let sum_i: usize = subset.iter().sum();
    let allowed: Vec<usize> = {
        let mut a = non_shadow(n, subset);
        a.push(j);
        a
    };
    if w.sum() >= sum_i || non_shadow(n, &witness).iter().any(|x| !allowed.contains(x)) {
        return Err(Error::Invariant(format!(
            "reduction witness {} fails for I={} j={j}",
            fmt_set(&witness),
            fmt_set(subset)
        )));
    }
    Ok(w)
}

/// Least-sum lacunar `J ⊆ [n-1]` whose shadow `J ∪ (J-1)` contains the shadow
/// of `k` inside `[n-1]`. Position `i` is covered by choosing `i` or `i+1`.
fn lacunarize(n: usize, k: &[usize]) -> Vec<usize> {
    let needed: Vec<bool> = (0..=n).map(|i| i >= 1 && i < n && (k.contains(&i) || k.contains(&(i + 1)))).collect();
    // state: (position, previous chosen, previous position still uncovered)
    let mut memo: HashMap<(usize, bool, bool), Option<(usize, Vec<usize>)>> = HashMap::new();
    fn best(
        i: usize,
        prev_chosen: bool,
        pending: bool,
        n: usize,
        needed: &[bool],
        memo: &mut HashMap<(usize, bool, bool), Option<(usize, Vec<usize>)>>,
    ) -> Option<(usize, Vec<usize>)> {
        if i == n {
            return (!pending).then(|| (0, Vec::new()));
        }
        if let Some(r) = memo.get(&(i, prev_chosen, pending)) {
            return r.clone();
        }
        let mut options = Vec::new();
        if !pending {
            if let Some((s, v)) = best(i + 1, false, needed[i], n, needed, memo) {
                options.push((s, v));
            }
        }
        if !prev_chosen {
            if let Some((s, mut v)) = best(i + 1, true, false, n, needed, memo) {
                v.insert(0, i);
                options.push((s + i, v));
            }
        }
        let r = options.into_iter().min();
        memo.insert((i, prev_chosen, pending), r.clone());
        r
    }
    best(1, false, false, n, &needed, &mut memo)
        .map(|(_, v)| v)
        .expect("every subset of [n-1] has a lacunar cover")
}

/// Integer partition with weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(invalid("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(invalid("partition parts must be weakly decreasing"));
        }
        Ok(Partition { parts })
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(m)`, empty when `m = 0`.
    pub fn row(m: usize) -> Self {
        Self::from_unsorted(vec![m])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row `r` (0-based), zero past the end.
    pub fn part(&self, r: usize) -> usize {
        self.parts.get(r).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition { parts: (0..width).map(|c| self.parts.iter().filter(|&&p| p > c).count()).collect() }
    }

    /// Every partition of `n`, in reverse lexicographic order (`(n)` first).
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Comma-separated parts; `[]` for the empty partition.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "[]");
        }
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| invalid(format!("bad partition part {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Number of standard Young tableaux of shape `lambda` (hook-length formula).
pub fn count_syt(lambda: &Partition) -> u128 {
    let conj = lambda.conjugate();
    let mut hooks: u128 = 1;
    for (r, &len) in lambda.parts.iter().enumerate() {
        for c in 0..len {
            hooks *= (len - c - 1 + conj.parts[c] - r - 1 + 1) as u128;
        }
    }
    factorial(lambda.size()) / hooks
}

/// `f_0 = 0, f_1 = 1, f_m = f_{m-1} + f_{m-2}`. Panics past `f_186`.
pub fn fibonacci(m: usize) -> u128 {
    let (mut a, mut b) = (0u128, 1u128);
    for _ in 0..m {
        let next = a.checked_add(b).expect("fibonacci overflow");
        a = b;
        b = next;
    }
    a
}
