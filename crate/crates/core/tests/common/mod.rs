//! Brute-force oracles, written without touching the library algorithms they
//! check.

#![allow(dead_code)]

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use shuffle_spectra::{Matrix, Rational, UniPoly};

/// Partitions of `n`, largest first in lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rem.min(max)).rev() {
            cur.push(part);
            rec(rem - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn sorted_desc(v: &[usize]) -> Vec<usize> {
    let mut s: Vec<usize> = v.iter().copied().filter(|&x| x > 0).collect();
    s.sort_unstable_by(|a, b| b.cmp(a));
    s
}

/// Counts semistandard tableaux of `shape` with `content[k]` entries equal to `k`
/// by filling cells in reading order.
fn count_ssyt(shape: &[usize], content: &[usize]) -> u64 {
    let cells: Vec<(usize, usize)> = shape.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut left = content.to_vec();
    fn rec(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, left: &mut Vec<usize>) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (r, c) = cells[k];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 0 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 0 };
        let mut total = 0;
        for v in lo_row.max(lo_col)..left.len() {
            if left[v] == 0 {
                continue;
            }
            left[v] -= 1;
            grid[r][c] = v;
            total += rec(k + 1, cells, grid, left);
            left[v] += 1;
        }
        total
    }
    if shape.iter().sum::<usize>() != content.iter().sum::<usize>() {
        return 0;
    }
    rec(0, &cells, &mut grid, &mut left)
}

thread_local! {
    static KOSTKA: RefCell<HashMap<(Vec<usize>, Vec<usize>), u64>> = RefCell::new(HashMap::new());
}

/// Kostka number `K_{shape, content}`; content is sorted first, which is
/// harmless because Kostka numbers are symmetric in the content.
pub fn kostka(shape: &[usize], content: &[usize]) -> u64 {
    let key = (shape.to_vec(), sorted_desc(content));
    if let Some(k) = KOSTKA.with(|m| m.borrow().get(&key).copied()) {
        return k;
    }
    let k = count_ssyt(&key.0, &key.1);
    KOSTKA.with(|m| m.borrow_mut().insert(key, k));
    k
}

/// Number of standard tableaux, as `K_{λ, 1^n}`.
pub fn syt_count(shape: &[usize]) -> u64 {
    kostka(shape, &vec![1; shape.iter().sum()])
}

/// A homogeneous symmetric function stored by the coefficients of `x^μ`
/// for partitions `μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSym {
    pub degree: usize,
    pub coeffs: BTreeMap<Vec<usize>, i64>,
}

impl MonomialSym {
    pub fn h(m: usize) -> Self {
        MonomialSym { degree: m, coeffs: partitions(m).into_iter().map(|p| (p, 1)).collect() }
    }

    pub fn schur(lambda: &[usize]) -> Self {
        let d = lambda.iter().sum();
        let coeffs = partitions(d).into_iter().map(|mu| {
            let k = kostka(lambda, &mu) as i64;
            (mu, k)
        });
        MonomialSym { degree: d, coeffs: coeffs.filter(|(_, k)| *k != 0).collect() }
    }

    fn at(&self, exponents: &[usize]) -> i64 {
        self.coeffs.get(&sorted_desc(exponents)).copied().unwrap_or(0)
    }

    /// Coefficient of `x^μ` in `f·g` is the sum over all splittings
    /// `μ = α + β` of `f_α g_β`.
    pub fn mul(&self, other: &MonomialSym) -> MonomialSym {
        let d = self.degree + other.degree;
        let mut coeffs = BTreeMap::new();
        for mu in partitions(d) {
            let mut total = 0i64;
            let mut alpha = vec![0; mu.len()];
            loop {
                if alpha.iter().sum::<usize>() == self.degree {
                    let beta: Vec<usize> = mu.iter().zip(&alpha).map(|(m, a)| m - a).collect();
                    total += self.at(&alpha) * other.at(&beta);
                }
                // odometer over 0 ≤ α ≤ μ
                let mut k = 0;
                while k < mu.len() && alpha[k] == mu[k] {
                    alpha[k] = 0;
                    k += 1;
                }
                if k == mu.len() {
                    break;
                }
                alpha[k] += 1;
            }
            if total != 0 {
                coeffs.insert(mu, total);
            }
        }
        MonomialSym { degree: d, coeffs }
    }

    pub fn sub(&self, other: &MonomialSym) -> MonomialSym {
        let mut coeffs = self.coeffs.clone();
        for (k, v) in &other.coeffs {
            *coeffs.entry(k.clone()).or_default() -= v;
        }
        coeffs.retain(|_, v| *v != 0);
        MonomialSym { degree: self.degree, coeffs }
    }

    /// Schur coefficients by peeling leading terms in dominance-compatible order.
    pub fn to_schur(&self) -> BTreeMap<Vec<usize>, i64> {
        let parts = partitions(self.degree);
        let mut out = BTreeMap::new();
        let mut found: Vec<(Vec<usize>, i64)> = Vec::new();
        for mu in &parts {
            let mut c = self.coeffs.get(mu).copied().unwrap_or(0);
            for (nu, cn) in &found {
                c -= cn * kostka(nu, mu) as i64;
            }
            if c != 0 {
                found.push((mu.clone(), c));
                out.insert(mu.clone(), c);
            }
        }
        out
    }
}

/// Lacunar subsets of `[n−1]` by brute force over bitmasks, sorted by sum
/// then lexicographically.
pub fn lacunar_sets(n: usize) -> Vec<Vec<usize>> {
    let top = n.saturating_sub(1);
    let mut out: Vec<Vec<usize>> = (0u32..1 << top)
        .filter(|mask| mask & (mask >> 1) == 0)
        .map(|mask| (1..=top).filter(|&i| mask >> (i - 1) & 1 == 1).collect())
        .collect();
    out.sort_by(|a: &Vec<usize>, b: &Vec<usize>| a.iter().sum::<usize>().cmp(&b.iter().sum()).then(a.cmp(b)));
    out
}

/// `m_{I,ℓ}`: distance from `ℓ` up to the next element of `{0} ∪ I ∪ {n+1}`.
pub fn m_vector(n: usize, set: &[usize]) -> Vec<usize> {
    (1..=n).map(|l| (l..=n + 1).find(|x| set.contains(x) || *x == n + 1).unwrap() - l).collect()
}

/// Gap sequence `j_k = i_k − i_{k−1}` of `I ∪ {n+1}` with `i_0 = 1`.
pub fn gaps(n: usize, set: &[usize]) -> Vec<usize> {
    let mut prev = 1;
    let mut out = Vec::new();
    for &x in set.iter().chain(std::iter::once(&(n + 1))) {
        out.push(x - prev);
        prev = x;
    }
    out
}

fn fact(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// `n!/Π j_k! · Π_{k≥2}(j_k − 1)`.
pub fn rank_formula(n: usize, set: &[usize]) -> u128 {
    let j = gaps(n, set);
    let denom: u128 = j.iter().map(|&x| fact(x)).product();
    let extra: u128 = j[1..].iter().map(|&x| x as u128 - 1).product();
    fact(n) / denom * extra
}

/// `z_I` through products in the monomial basis.
pub fn z_oracle(n: usize, set: &[usize]) -> BTreeMap<Vec<usize>, i64> {
    let j = gaps(n, set);
    let mut f = MonomialSym::h(j[0]);
    for &x in &j[1..] {
        let z = MonomialSym::h(x - 1).mul(&MonomialSym::h(1)).sub(&MonomialSym::h(x));
        f = f.mul(&z);
    }
    f.to_schur()
}

/// Characteristic polynomial `det(xI − M)` by Faddeev–LeVerrier.
pub fn leverrier(m: &Matrix) -> UniPoly {
    let n = m.rows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut mk = Matrix::zeros(n, n);
    for k in 1..=n {
        // mk holds M·M_k with M_k = M·M_{k−1} + c_{n−k+1} I
        let shifted = &mk + &Matrix::scalar(n, &coeffs[n - k + 1]);
        mk = m * &shifted;
        coeffs[n - k] = -(&mk.trace() / &Rational::from(k));
    }
    UniPoly::from_coeffs(coeffs)
}

/// Permutation images `σ(1..=n)` in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Vec<usize>> {
    fn rec(avail: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if avail.is_empty() {
            out.push(cur.clone());
            return;
        }
        for k in 0..avail.len() {
            let x = avail.remove(k);
            cur.push(x);
            rec(avail, cur, out);
            cur.pop();
            avail.insert(k, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut (1..=n).collect(), &mut Vec::new(), &mut out);
    out
}

/// Cycle type of a permutation given by images, largest cycle first.
pub fn cycle_type(images: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; images.len()];
    let mut out = Vec::new();
    for s in 0..images.len() {
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = images[x] - 1;
            len += 1;
        }
        if len > 0 {
            out.push(len);
        }
    }
    sorted_desc(&out)
}
