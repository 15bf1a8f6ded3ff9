//! Exact linear algebra over rationals: fraction-free (Bareiss-style)
//! elimination for determinants, linear solves, ranks and kernel vectors,
//! plus the bordered determinant with one polynomial row atop a numeric
//! block that all the transform formulas share.
//!
//! Pivoting is a full search among nonzero entries, tie-broken by first row
//! then first column, so every result is deterministic.

use crate::poly::Poly;
use crate::rat::Rat;

/// A dense rational matrix in row-major storage.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    /// Builds from row vectors; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Mat {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(n_rows * n_cols);
        for row in rows {
            assert_eq!(row.len(), n_cols, "Mat::from_rows: ragged rows");
            data.extend(row);
        }
        Mat {
            rows: n_rows,
            cols: n_cols,
            data,
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    /// Copy with column `drop` removed.
    pub fn without_col(&self, drop: usize) -> Mat {
        assert!(drop < self.cols);
        Mat::from_fn(self.rows, self.cols - 1, |i, j| {
            self.at(i, if j < drop { j } else { j + 1 }).clone()
        })
    }
}

/// Forward Bareiss elimination state over a copy of the input.
///
/// Column permutation applies to the `main` columns only; any further columns
/// are carried along (augmented) and never pivoted on.
struct Elimination {
    a: Vec<Vec<Rat>>,
    col_perm: Vec<usize>,
    main_cols: usize,
    sign_flip: bool,
    rank: usize,
}

impl Elimination {
    fn run(m: &Mat, aug: &[Rat]) -> Elimination {
        let rows = m.rows();
        let main_cols = m.cols();
        assert!(aug.is_empty() || aug.len() == rows);
        let a: Vec<Vec<Rat>> = (0..rows)
            .map(|i| {
                let mut row: Vec<Rat> = (0..main_cols).map(|j| m.at(i, j).clone()).collect();
                if !aug.is_empty() {
                    row.push(aug[i].clone());
                }
                row
            })
            .collect();
        let mut e = Elimination {
            a,
            col_perm: (0..main_cols).collect(),
            main_cols,
            sign_flip: false,
            rank: 0,
        };
        e.forward(rows);
        e
    }

    fn forward(&mut self, rows: usize) {
        let total_cols = if self.a.is_empty() {
            0
        } else {
            self.a[0].len()
        };
        let mut prev = Rat::one();
        for k in 0..rows.min(self.main_cols) {
            // first nonzero entry in the remaining block, row-major
            let pivot = (k..rows)
                .flat_map(|i| (k..self.main_cols).map(move |j| (i, j)))
                .find(|&(i, j)| !self.a[i][self.col_perm[j]].is_zero());
            let (pi, pj) = match pivot {
                Some(p) => p,
                None => return,
            };
            if pi != k {
                self.a.swap(pi, k);
                self.sign_flip = !self.sign_flip;
            }
            if pj != k {
                self.col_perm.swap(pj, k);
                self.sign_flip = !self.sign_flip;
            }
            let ck = self.col_perm[k];
            for i in k + 1..rows {
                for j in k + 1..total_cols {
                    let c = if j < self.main_cols {
                        self.col_perm[j]
                    } else {
                        j
                    };
                    let num = &(&self.a[k][ck] * &self.a[i][c]) - &(&self.a[i][ck] * &self.a[k][c]);
                    self.a[i][c] = &num / &prev;
                }
                self.a[i][ck] = Rat::zero();
            }
            prev = self.a[k][ck].clone();
            self.rank = k + 1;
        }
    }

    fn entry(&self, i: usize, j: usize) -> &Rat {
        &self.a[i][self.col_perm[j]]
    }

    fn aug_entry(&self, i: usize) -> &Rat {
        &self.a[i][self.main_cols]
    }
}

/// Exact determinant of a square matrix.
pub fn det(m: &Mat) -> Rat {
    assert_eq!(m.rows(), m.cols(), "det: matrix not square");
    let n = m.rows();
    if n == 0 {
        return Rat::one();
    }
    let e = Elimination::run(m, &[]);
    if e.rank < n {
        return Rat::zero();
    }
    let d = e.entry(n - 1, n - 1).clone();
    if e.sign_flip {
        -d
    } else {
        d
    }
}

/// Solves `a x = rhs` exactly; `None` when `a` is singular.
pub fn solve(a: &Mat, rhs: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(a.rows(), a.cols(), "solve: matrix not square");
    assert_eq!(a.rows(), rhs.len(), "solve: rhs length mismatch");
    let n = a.rows();
    if n == 0 {
        return Some(Vec::new());
    }
    let e = Elimination::run(a, rhs);
    if e.rank < n {
        return None;
    }
    let mut x = vec![Rat::zero(); n];
    for i in (0..n).rev() {
        let mut acc = e.aug_entry(i).clone();
        for j in i + 1..n {
            acc = &acc - &(e.entry(i, j) * &x[e.col_perm[j]]);
        }
        x[e.col_perm[i]] = &acc / e.entry(i, i);
    }
    Some(x)
}

/// Rank of an arbitrary rectangular matrix.
pub fn rank(m: &Mat) -> usize {
    Elimination::run(m, &[]).rank
}

/// A nonzero vector in the kernel of a singular square matrix, or `None`
/// when the matrix is nonsingular.
pub fn kernel_vector(m: &Mat) -> Option<Vec<Rat>> {
    assert_eq!(m.rows(), m.cols(), "kernel_vector: matrix not square");
    let n = m.rows();
    let e = Elimination::run(m, &[]);
    if e.rank == n {
        return None;
    }
    let mut x = vec![Rat::zero(); n];
    x[e.col_perm[e.rank]] = Rat::one();
    for i in (0..e.rank).rev() {
        let mut acc = Rat::zero();
        for j in i + 1..n {
            acc = &acc + &(e.entry(i, j) * &x[e.col_perm[j]]);
        }
        x[e.col_perm[i]] = -(&acc / e.entry(i, i));
    }
    Some(x)
}

/// Signed first-row cofactors of a bordered matrix: entry `i` is
/// `(-1)^i det(body with column i deleted)`.
///
/// `body` must have exactly one more column than rows; for the empty
/// `0 x 1`-shaped case this is `[1]`.
pub fn bordered_cofactors(body: &Mat) -> Vec<Rat> {
    assert_eq!(
        body.cols(),
        body.rows() + 1,
        "bordered_cofactors: body must be (n) x (n+1)"
    );
    (0..body.cols())
        .map(|i| {
            let minor = det(&body.without_col(i));
            if i % 2 == 0 {
                minor
            } else {
                -minor
            }
        })
        .collect()
}

/// Determinant of the square matrix whose first row holds polynomials and
/// whose remaining rows are the numeric `body`, by cofactor expansion along
/// the first row.
pub fn det_poly_bordered(first_row: &[Poly], body: &Mat) -> Poly {
    assert_eq!(
        first_row.len(),
        body.cols(),
        "det_poly_bordered: first row width mismatch"
    );
    let weights = bordered_cofactors(body);
    let mut acc = Poly::zero();
    for (w, p) in weights.iter().zip(first_row) {
        acc = &acc + &p.scalar_mul(w);
    }
    acc
}
