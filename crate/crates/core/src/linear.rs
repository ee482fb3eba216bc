//! Row reduction over the coefficient field, for degree-one forms.

use num_traits::Zero;

use crate::poly::{Coeff, Field, Polynomial};

/// Reduced row echelon form of a set of linear forms.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub rows: Vec<Vec<Coeff>>,
    /// Pivot column of each row, strictly increasing.
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Columns without a pivot.
    pub fn free_columns(&self, ncols: usize) -> Vec<usize> {
        (0..ncols).filter(|c| !self.pivots.contains(c)).collect()
    }
}

/// Coefficient vector of a polynomial whose terms all have degree one.
pub fn linear_coefficients(p: &Polynomial) -> Option<Vec<Coeff>> {
    let mut row = vec![Coeff::zero(); p.ring().nvars()];
    for (m, c) in p.terms() {
        if m.degree() != 1 {
            return None;
        }
        let i = m.support().next().expect("degree one");
        row[i] = c.clone();
    }
    Some(row)
}

pub fn echelon(field: Field, rows: &[Vec<Coeff>], ncols: usize) -> Echelon {
    let mut rows: Vec<Vec<Coeff>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(src) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, src);
        let inv = field.inv(&rows[rank][col]);
        for v in rows[rank].iter_mut() {
            *v = field.mul(v, &inv);
        }
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot) {
                    let sub = field.mul(&factor, p);
                    *v = field.sub(v, &sub);
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    Echelon { rows, pivots }
}
