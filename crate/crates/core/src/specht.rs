//! Specht modules as spans of standard polytabloids inside the tabloid space.

use std::collections::HashMap;

use crate::combinat::{count_syt, Partition};
use crate::error::{check_dim, invalid, Error, Result};
use crate::exactlin::{Matrix, Rational};
use crate::groupalg::{GroupAlgebraElement, Permutation, SymmetricGroup};

/// Row-equivalence class of a filling; `row_of[x-1]` is the row holding `x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tabloid {
    row_of: Vec<u8>,
}

impl Tabloid {
    /// Sorted row contents.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let nrows = self.row_of.iter().map(|&r| r as usize + 1).max().unwrap_or(0);
        let mut rows = vec![Vec::new(); nrows];
        for (x, &r) in self.row_of.iter().enumerate() {
            rows[r as usize].push(x + 1);
        }
        rows
    }

    /// `σ{T} = {σT}`.
    pub fn permuted(&self, sigma: &Permutation) -> Tabloid {
        let mut row_of = vec![0u8; self.row_of.len()];
        for (x, &r) in self.row_of.iter().enumerate() {
            row_of[sigma.apply(x + 1) - 1] = r;
        }
        Tabloid { row_of }
    }
}

/// Rows of entries; each row increasing, each column increasing.
pub type Tableau = Vec<Vec<usize>>;

/// Standard Young tableaux ordered lexicographically by row reading word.
pub fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    let n = shape.size();
    let mut out = Vec::new();
    let mut rows: Tableau = vec![Vec::new(); shape.len()];
    // place 1..n one at a time in any row end that keeps the shape a partition
    fn rec(next: usize, n: usize, shape: &Partition, rows: &mut Tableau, out: &mut Vec<Tableau>) {
        if next > n {
            out.push(rows.clone());
            return;
        }
        for r in 0..rows.len() {
            let len = rows[r].len();
            if len < shape.part(r) && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(next);
                rec(next + 1, n, shape, rows, out);
                rows[r].pop();
            }
        }
    }
    rec(1, n, shape, &mut rows, &mut out);
    out.sort_by_key(|t| t.concat());
    out
}

fn all_tabloids(shape: &Partition) -> Vec<Tabloid> {
    let n = shape.size();
    let mut out = Vec::new();
    let mut row_of = vec![0u8; n];
    let mut room: Vec<usize> = shape.parts().to_vec();
    fn rec(x: usize, row_of: &mut Vec<u8>, room: &mut Vec<usize>, out: &mut Vec<Tabloid>) {
        if x == row_of.len() {
            out.push(Tabloid { row_of: row_of.clone() });
            return;
        }
        for r in 0..room.len() {
            if room[r] > 0 {
                room[r] -= 1;
                row_of[x] = r as u8;
                rec(x + 1, row_of, room, out);
                room[r] += 1;
            }
        }
    }
    rec(0, &mut row_of, &mut room, &mut out);
    out
}

fn tabloid_of(t: &Tableau, n: usize) -> Tabloid {
    let mut row_of = vec![0u8; n];
    for (r, row) in t.iter().enumerate() {
        for &x in row {
            row_of[x - 1] = r as u8;
        }
    }
    Tabloid { row_of }
}

/// All permutations of `[n]` that preserve each column of `t`, with signs.
fn column_group(t: &Tableau, n: usize) -> Vec<(Permutation, i64)> {
    let width = t.first().map_or(0, Vec::len);
    let columns: Vec<Vec<usize>> =
        (0..width).map(|c| t.iter().take_while(|row| row.len() > c).map(|row| row[c]).collect()).collect();
    let mut out = vec![(Permutation::identity(n), 1i64)];
    for col in &columns {
        if col.len() < 2 {
            continue;
        }
        let local = SymmetricGroup::new(col.len());
        let mut next = Vec::with_capacity(out.len() * local.order());
        for (g, sg) in &out {
            for h in local.elements() {
                let mut images = (1..=n).collect::<Vec<_>>();
                for (k, &x) in col.iter().enumerate() {
                    images[x - 1] = col[h.apply(k + 1) - 1];
                }
                let hp = Permutation::from_images(&images).expect("column permutation");
                next.push((hp.compose(g), sg * h.sign()));
            }
        }
        out = next;
    }
    out
}

#[derive(Clone, Debug)]
pub struct SpechtModule {
    shape: Partition,
    tableaux: Vec<Tableau>,
    tabloids: Vec<Tabloid>,
    tabloid_index: HashMap<Tabloid, usize>,
    /// Column `j` is the polytabloid of `tableaux[j]`, as sparse tabloid coordinates.
    polytabloids: Vec<Vec<(usize, i64)>>,
    /// Tabloids on which the polytabloid matrix restricts to an invertible block.
    pivot_tabloids: Vec<usize>,
    pivot_inverse: Matrix,
}

impl SpechtModule {
    pub fn new(shape: &Partition) -> Result<Self> {
        let n = shape.size();
        let tableaux = standard_tableaux(shape);
        let tabloids = all_tabloids(shape);
        let tabloid_index: HashMap<Tabloid, usize> = tabloids.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let polytabloids: Vec<Vec<(usize, i64)>> = tableaux
            .iter()
            .map(|t| {
                let base = tabloid_of(t, n);
                let mut v: Vec<(usize, i64)> =
                    column_group(t, n).iter().map(|(g, s)| (tabloid_index[&base.permuted(g)], *s)).collect();
                v.sort_unstable();
                v
            })
            .collect();
        let d = tableaux.len();
        if d as u128 != count_syt(shape) {
            return Err(Error::Invariant(format!("found {d} standard tableaux of shape {shape}")));
        }
        // rows of P^T are polytabloids; its pivot columns pick an invertible block
        let mut pt = Matrix::zeros(d, tabloids.len());
        for (j, col) in polytabloids.iter().enumerate() {
            for &(i, s) in col {
                pt.set(j, i, Rational::from_integer(s));
            }
        }
        let (_, pivot_tabloids) = pt.rref();
        if pivot_tabloids.len() != d {
            return Err(Error::Invariant(format!("standard polytabloids of shape {shape} are dependent")));
        }
        let mut block = Matrix::zeros(d, d);
        for (r, &i) in pivot_tabloids.iter().enumerate() {
            for j in 0..d {
                block.set(r, j, pt.get(j, i).clone());
            }
        }
        let pivot_inverse = block.inverse().ok_or_else(|| Error::Invariant("singular pivot block".into()))?;
        Ok(SpechtModule { shape: shape.clone(), tableaux, tabloids, tabloid_index, polytabloids, pivot_tabloids, pivot_inverse })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.size()
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn standard_tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    pub fn tabloids(&self) -> &[Tabloid] {
        &self.tabloids
    }

    /// Tabloids × standard polytabloids.
    pub fn polytabloid_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.tabloids.len(), self.dim());
        for (j, col) in self.polytabloids.iter().enumerate() {
            for &(i, s) in col {
                m.set(i, j, Rational::from_integer(s));
            }
        }
        m
    }

    /// Coordinates of a tabloid-space vector in the standard polytabloid
    /// basis. Errors if the vector is not in the span.
    pub fn coords(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        check_dim(self.tabloids.len(), v.len())?;
        let restricted: Vec<Rational> = self.pivot_tabloids.iter().map(|&i| v[i].clone()).collect();
        let c = self.pivot_inverse.apply(&restricted)?;
        let mut back = vec![Rational::zero(); v.len()];
        for (j, col) in self.polytabloids.iter().enumerate() {
            if c[j].is_zero() {
                continue;
            }
            for &(i, s) in col {
                back[i] += &c[j] * &Rational::from_integer(s);
            }
        }
        if back != v {
            return Err(Error::Invariant(format!("vector outside S^({})", self.shape)));
        }
        Ok(c)
    }

    /// `L_λ(σ)` in the standard polytabloid basis.
    pub fn perm_matrix(&self, sigma: &Permutation) -> Result<Matrix> {
        if sigma.n() != self.n() {
            return Err(invalid(format!("permutation of [{}] acting on S^({})", sigma.n(), self.shape)));
        }
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for (j, col) in self.polytabloids.iter().enumerate() {
            let mut image = vec![Rational::zero(); self.tabloids.len()];
            for &(i, s) in col {
                let k = self.tabloid_index[&self.tabloids[i].permuted(sigma)];
                image[k] += Rational::from_integer(s);
            }
            for (r, c) in self.coords(&image)?.into_iter().enumerate() {
                m.set(r, j, c);
            }
        }
        Ok(m)
    }

    /// `L_λ(a) = Σ a_σ L_λ(σ)`.
    pub fn action_matrix(&self, a: &GroupAlgebraElement) -> Result<Matrix> {
        if a.n() != self.n() {
            return Err(invalid(format!("element of Q[S_{}] acting on S^({})", a.n(), self.shape)));
        }
        let d = self.dim();
        let mut acc = Matrix::zeros(d, d);
        for (p, c) in a.terms() {
            acc = &acc + &self.perm_matrix(p)?.scale(c);
        }
        Ok(acc)
    }

    /// `L_λ(σ)` for every σ, indexed by lexicographic rank.
    pub fn perm_table(&self) -> Result<Vec<Matrix>> {
        SymmetricGroup::new(self.n()).elements().iter().map(|p| self.perm_matrix(p)).collect()
    }
}

/// `L_λ(a)` from a precomputed [`SpechtModule::perm_table`].
pub fn action_from_table(table: &[Matrix], a: &GroupAlgebraElement) -> Matrix {
    let d = table.first().map_or(0, Matrix::rows);
    let mut acc = Matrix::zeros(d, d);
    for (p, c) in a.terms() {
        acc = &acc + &table[p.lex_rank()].scale(c);
    }
    acc
}

pub fn build_specht(shape: &Partition) -> Result<SpechtModule> {
    SpechtModule::new(shape)
}
