//! Smith normal form over truncated power series.
//!
//! Over k[[t]] every matrix diagonalizes as `U * diag(t^a_1, ..) * V` with
//! `U`, `V` unimodular and nondecreasing exponents. At finite precision an
//! all-zero residual block yields `AtLeast(N)` diagonal markers instead of
//! exponents; those are legal outputs here and are escalated to errors only
//! where a caller requires finite divisors.

use crate::matrix::SeriesMat;
use crate::series::{TruncSeries, ValOrBound};

/// The result of the Smith reduction: `input = u * diagonal * v` to
/// precision, with all four transformation matrices accumulated so both the
/// decomposition and its inverse solves are cheap.
#[derive(Debug, Clone)]
pub struct SmithDecomposition {
    u: SeriesMat,
    u_inv: SeriesMat,
    v: SeriesMat,
    v_inv: SeriesMat,
    divisors: Vec<ValOrBound>,
    rows: usize,
    cols: usize,
}

impl SmithDecomposition {
    pub fn u(&self) -> &SeriesMat {
        &self.u
    }

    pub fn u_inv(&self) -> &SeriesMat {
        &self.u_inv
    }

    pub fn v(&self) -> &SeriesMat {
        &self.v
    }

    pub fn v_inv(&self) -> &SeriesMat {
        &self.v_inv
    }

    /// Elementary-divisor exponents `a_1 <= a_2 <= ...`, with `AtLeast(N)`
    /// markers for diagonal positions unreadable at this precision.
    pub fn divisors(&self) -> &[ValOrBound] {
        &self.divisors
    }

    /// Number of diagonal entries with a finite exponent.
    pub fn rank_profile(&self) -> usize {
        self.divisors.iter().filter(|d| d.is_finite()).count()
    }

    /// Sum of the exponents, when every divisor is finite.
    pub fn divisor_sum(&self) -> Option<usize> {
        self.divisors.iter().map(|d| d.finite()).sum()
    }

    /// The diagonal factor as a matrix: `t^a_i` at finite positions, zero at
    /// `AtLeast` positions (correct to precision).
    pub fn diagonal_matrix(&self) -> SeriesMat {
        let field = self.u.field();
        let prec = self.u.precision();
        SeriesMat::from_fn(self.rows, self.cols, field, prec, |i, j| {
            if i == j {
                match self.divisors.get(i) {
                    Some(ValOrBound::Finite(a)) => TruncSeries::monomial(field, *a, prec),
                    _ => TruncSeries::zero(field, prec),
                }
            } else {
                TruncSeries::zero(field, prec)
            }
        })
    }

    /// Recomposes `u * diagonal * v`; equals the input to precision.
    pub fn recompose(&self) -> SeriesMat {
        self.u.mul(&self.diagonal_matrix()).mul(&self.v)
    }
}

/// Reduces `m` to Smith normal form.
///
/// Pivoting is deterministic: the entry of minimal finite valuation wins,
/// ties broken by lowest row index then lowest column index, so repeated
/// runs produce identical decompositions.
pub fn smith_normal_form(m: &SeriesMat) -> SmithDecomposition {
    let rows = m.rows();
    let cols = m.cols();
    let field = m.field();
    let prec = m.precision();
    let mut a = m.clone();
    let mut u = SeriesMat::identity(rows, field, prec);
    let mut u_inv = SeriesMat::identity(rows, field, prec);
    let mut v = SeriesMat::identity(cols, field, prec);
    let mut v_inv = SeriesMat::identity(cols, field, prec);
    let steps = rows.min(cols);
    let mut divisors = Vec::with_capacity(steps);

    for step in 0..steps {
        // Minimal finite valuation in the trailing submatrix.
        let mut best: Option<(usize, usize, usize)> = None;
        for i in step..rows {
            for j in step..cols {
                if let ValOrBound::Finite(w) = a.entry(i, j).val() {
                    if best.map_or(true, |(bw, _, _)| w < bw) {
                        best = Some((w, i, j));
                    }
                }
            }
        }
        let Some((pval, pi, pj)) = best else {
            // Residual block indistinguishable from zero.
            for _ in step..steps {
                divisors.push(ValOrBound::AtLeast(prec));
            }
            break;
        };

        if pi != step {
            a.swap_rows(step, pi);
            u.swap_cols(step, pi);
            u_inv.swap_rows(step, pi);
        }
        if pj != step {
            a.swap_cols(step, pj);
            v.swap_rows(step, pj);
            v_inv.swap_cols(step, pj);
        }

        // Normalize the pivot to exactly t^pval. The pivot is t^pval times a
        // unit; scaling its row by the unit inverse keeps U unimodular.
        let unit = a.entry(step, step).shift_down(pval);
        let unit_inv = unit.invert().expect("pivot leading coefficient is a unit");
        a.scale_row(step, &unit_inv);
        u.scale_col(step, &unit);
        u_inv.scale_row(step, &unit_inv);

        // Clear the pivot column. Every entry has valuation >= pval, so the
        // quotient by t^pval is a series; the zero-fill introduced by
        // shift_down only perturbs products beyond t^N.
        for i in step + 1..rows {
            if a.entry(i, step).is_zero_to_precision() {
                continue;
            }
            let q = a.entry(i, step).shift_down(pval);
            a.row_sub_mul(i, step, &q);
            u.col_add_mul(step, i, &q);
            u_inv.row_sub_mul(i, step, &q);
        }
        // Clear the pivot row. The pivot column below is already zero, so
        // these column operations only change the pivot row.
        for j in step + 1..cols {
            if a.entry(step, j).is_zero_to_precision() {
                continue;
            }
            let q = a.entry(step, j).shift_down(pval);
            a.col_sub_mul(j, step, &q);
            v.row_add_mul(step, j, &q);
            v_inv.col_sub_mul(j, step, &q);
        }

        divisors.push(ValOrBound::Finite(pval));
    }

    SmithDecomposition {
        u,
        u_inv,
        v,
        v_inv,
        divisors,
        rows,
        cols,
    }
}
