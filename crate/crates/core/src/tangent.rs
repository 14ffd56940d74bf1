//! Tangent spaces to arc spaces at an arc, the tangent map induced by a
//! morphism, and the injectivity/cokernel verdict that ties the elementary
//! divisors to the contact order along the ramification subscheme.

use crate::arc::{arc_pushforward, check_not_in_sing_arcs, check_smooth_along, ord_along, Arc};
use crate::error::TangentError;
use crate::matrix::SeriesMat;
use crate::scalar::Scalar;
use crate::scheme::{jacobian, ramification_ideal, AffinePresentation, MorphismPresentation};
use crate::series::{TruncSeries, ValOrBound};
use crate::smith::{smith_normal_form, SmithDecomposition};

/// The tangent space to the arc space of a scheme at a given arc, presented
/// by a saturated kernel basis of the Jacobian evaluated along the arc.
///
/// A tangent vector is a choice of series per ambient coordinate annihilated
/// by the evaluated Jacobian; the saturated basis spans the honest module,
/// not a finite-index submodule.
#[derive(Debug, Clone)]
pub struct TangentSpacePresentation {
    carrier: AffinePresentation,
    arc: Arc,
    kernel_basis: SeriesMat,
    free_rank: usize,
}

impl TangentSpacePresentation {
    pub fn carrier(&self) -> &AffinePresentation {
        &self.carrier
    }

    pub fn arc(&self) -> &Arc {
        &self.arc
    }

    /// Matrix whose columns form the saturated kernel basis.
    pub fn kernel_basis(&self) -> &SeriesMat {
        &self.kernel_basis
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }
}

/// Computes the kernel basis of the Jacobian of `y` along `delta`.
///
/// The Smith factor `V^{-1}` restricted to the columns past the finite rank
/// spans the kernel; each column is divided by its minimal entry valuation
/// so the basis is saturated (for unimodular factors the shift is a no-op,
/// kept as a guard).
pub fn tangent_space_presentation(
    y: &AffinePresentation,
    delta: &Arc,
) -> Result<TangentSpacePresentation, TangentError> {
    let m = y.ambient_dim();
    let n = y.declared_dim();
    let field = delta.field();
    let prec = delta.precision();

    let jac = jacobian(y.equations(), y.ambient_vars(), y.field());
    let jac_at = if jac.rows() == 0 {
        SeriesMat::zero(0, m, field, prec)
    } else {
        jac.eval_along(delta.coords())
    };
    let snf = smith_normal_form(&jac_at);
    let rank = snf.rank_profile();
    let expected = m - n;
    if rank != expected {
        return Err(TangentError::RankMismatch {
            expected,
            found: rank,
        });
    }

    let kernel_cols: Vec<usize> = (rank..m).collect();
    if kernel_cols.len() != n {
        return Err(TangentError::RankMismatch {
            expected: n,
            found: kernel_cols.len(),
        });
    }
    let mut basis = SeriesMat::from_fn(m, n, field, prec, |i, j| {
        snf.v_inv().entry(i, kernel_cols[j]).clone()
    });
    saturate_columns(&mut basis)?;

    Ok(TangentSpacePresentation {
        carrier: y.clone(),
        arc: delta.clone(),
        kernel_basis: basis,
        free_rank: n,
    })
}

/// Divides each column by `t^(min valuation of its entries)`.
fn saturate_columns(basis: &mut SeriesMat) -> Result<(), TangentError> {
    for j in 0..basis.cols() {
        let mut min_val = ValOrBound::AtLeast(basis.precision());
        for i in 0..basis.rows() {
            min_val = min_val.min_with(basis.entry(i, j).val());
        }
        match min_val {
            ValOrBound::Finite(0) => {}
            ValOrBound::Finite(v) => {
                for i in 0..basis.rows() {
                    let shifted = basis.entry(i, j).shift_down(v);
                    basis.set_entry(i, j, shifted);
                }
            }
            ValOrBound::AtLeast(_) => {
                return Err(TangentError::InsufficientPrecision(
                    "kernel basis column indistinguishable from zero".to_string(),
                ));
            }
        }
    }
    Ok(())
}

/// The matrix of the tangent map in the kernel bases: the unique `C` with
/// `(target kernel basis) * C = J_f(gamma) * (source kernel basis)` to
/// precision.
///
/// For a source with equations the source kernel basis is computed the same
/// way as the target's; for affine space it is the identity.
pub fn tangent_map_matrix(
    f: &MorphismPresentation,
    gamma: &Arc,
    tsp: &TangentSpacePresentation,
) -> Result<SeriesMat, TangentError> {
    let field = gamma.field();
    let prec = gamma.precision();
    let src = f.source();

    let source_basis = if src.is_affine_space() {
        SeriesMat::identity(src.ambient_dim(), field, prec)
    } else {
        tangent_space_presentation(src, gamma)?.kernel_basis().clone()
    };

    let jac_f = jacobian(f.components(), src.ambient_vars(), f.field());
    let jac_at = if jac_f.rows() == 0 {
        SeriesMat::zero(0, src.ambient_dim(), field, prec)
    } else {
        jac_f.eval_along(gamma.coords())
    };
    let image = jac_at.mul(&source_basis);
    solve_in_basis(tsp.kernel_basis(), &image)
}

/// Solves `basis * c = w` column by column through the Smith decomposition
/// of the basis. Fails when `w` leaves the span to precision.
fn solve_in_basis(basis: &SeriesMat, w: &SeriesMat) -> Result<SeriesMat, TangentError> {
    assert_eq!(basis.rows(), w.rows(), "solve dimension mismatch");
    let n = basis.cols();
    let snf = smith_normal_form(basis);
    let reduced = snf.u_inv().mul(w);

    // basis = U D V with D carrying t^{d_i} on the first n diagonal slots;
    // rows past n of U^{-1} w must vanish, the rest divide by t^{d_i}.
    let mut z_rows: Vec<Vec<TruncSeries>> = Vec::with_capacity(n);
    for i in 0..n {
        let d = match snf.divisors().get(i) {
            Some(ValOrBound::Finite(d)) => *d,
            _ => {
                return Err(TangentError::InsufficientPrecision(
                    "kernel basis is rank-deficient at this precision".to_string(),
                ))
            }
        };
        let mut row = Vec::with_capacity(w.cols());
        for j in 0..w.cols() {
            let entry = reduced.entry(i, j);
            match entry.val() {
                ValOrBound::Finite(v) if v < d => {
                    return Err(TangentError::SolveFailure(format!(
                        "image column {j} is not divisible by t^{d} in the basis"
                    )));
                }
                _ => row.push(entry.shift_down(d)),
            }
        }
        z_rows.push(row);
    }
    for i in n..reduced.rows() {
        for j in 0..w.cols() {
            if !reduced.entry(i, j).is_zero_to_precision() {
                return Err(TangentError::SolveFailure(format!(
                    "image column {j} lies outside the span of the basis"
                )));
            }
        }
    }
    let z = SeriesMat::from_rows(z_rows, w.field(), w.precision());
    Ok(snf.v_inv().mul(&z))
}

/// Dimension over the base field of the cokernel of `c` acting on
/// `(k[t]/t^N)^n`, by Gaussian elimination on the expanded `nN x nN` scalar
/// matrix. Independent of the Smith route by construction.
///
/// Requires `det(c)` to have finite valuation `v` with `2v < N` so the
/// answer is not a truncation artifact.
pub fn coker_dim_bruteforce(c: &SeriesMat) -> Result<usize, TangentError> {
    assert_eq!(c.rows(), c.cols(), "cokernel of a non-square matrix");
    let n = c.rows();
    let prec = c.precision();
    let det_val = c.det().val();
    match det_val {
        ValOrBound::Finite(v) if 2 * v < prec => {}
        other => {
            return Err(TangentError::PreconditionViolated(format!(
                "det valuation {other} does not satisfy 2v < N = {prec}"
            )));
        }
    }

    // Column (j, q) holds the coefficients of c_col_j * t^q.
    let dim = n * prec;
    let field = c.field();
    let mut rows: Vec<Vec<Scalar>> = vec![vec![field.zero(); dim]; dim];
    for j in 0..n {
        for q in 0..prec {
            let col_index = j * prec + q;
            for i in 0..n {
                let entry = c.entry(i, j);
                for s in 0..prec - q {
                    let coeff = entry.coeff(s);
                    if !coeff.is_zero() {
                        rows[i * prec + q + s][col_index] = coeff.clone();
                    }
                }
            }
        }
    }
    let rank = scalar_rank(&mut rows);
    Ok(dim - rank)
}

/// Row-reduction rank over the exact field.
fn scalar_rank(rows: &mut [Vec<Scalar>]) -> usize {
    let nrows = rows.len();
    let ncols = if nrows == 0 { 0 } else { rows[0].len() };
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inverse().expect("pivot is nonzero");
        for c in col..ncols {
            rows[rank][c] = rows[rank][c].mul(&inv);
        }
        for r in 0..nrows {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..ncols {
                    let sub = factor.mul(&rows[rank][c]);
                    rows[r][c] = rows[r][c].sub(&sub);
                }
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Outcome of the tangent-map verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// Injectivity certified and the cokernel dimension equals the contact
    /// order exactly.
    Confirmed,
    /// Some reading stayed below precision or a safety margin failed.
    Inconclusive(String),
    /// Every reading completed and the cokernel dimension differs from the
    /// contact order; this would falsify the implementation.
    Refuted,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Confirmed => write!(f, "Confirmed"),
            Verdict::Inconclusive(reason) => write!(f, "Inconclusive({reason})"),
            Verdict::Refuted => write!(f, "Refuted"),
        }
    }
}

/// The full record produced by [`tangent_map_verdict`].
#[derive(Debug, Clone)]
pub struct VerdictReport {
    /// Contact order along the ramification subscheme.
    pub e: ValOrBound,
    /// Elementary-divisor exponents of the tangent map.
    pub divisors: Vec<ValOrBound>,
    /// True iff injectivity is certified (all divisors finite).
    pub injective: bool,
    /// Sum of the divisor exponents, when all are finite.
    pub coker_dim: Option<usize>,
    /// Order of the target's singular locus along the image arc.
    pub sing_check: ValOrBound,
    pub verdict: Verdict,
}

/// Runs the whole pipeline: smoothness along the arc, pushforward, singular
/// locus certification, contact order, tangent spaces, tangent map, Smith
/// divisors, and the final comparison `coker_dim = e`.
///
/// Hypothesis violations surface as errors; readings lost to precision
/// surface as an `Inconclusive` verdict in the report.
pub fn tangent_map_verdict(
    f: &MorphismPresentation,
    gamma: &Arc,
) -> Result<VerdictReport, TangentError> {
    let prec = gamma.precision();

    if !check_smooth_along(f.source(), gamma)? {
        return Err(TangentError::SmoothnessFailure);
    }
    let delta = arc_pushforward(f, gamma)?;
    let sing_check = check_not_in_sing_arcs(f.target(), &delta)?;
    if !sing_check.is_finite() {
        return Err(TangentError::SingularTargetArc(sing_check));
    }

    let e = ord_along(&ramification_ideal(f), gamma)?;

    let mut report = VerdictReport {
        e,
        divisors: Vec::new(),
        injective: false,
        coker_dim: None,
        sing_check,
        verdict: Verdict::Inconclusive(String::new()),
    };

    let Some(e_val) = e.finite() else {
        report.verdict = Verdict::Inconclusive(format!("e unreadable: {e}"));
        return Ok(report);
    };

    let tsp = match tangent_space_presentation(f.target(), &delta) {
        Ok(tsp) => tsp,
        Err(TangentError::InsufficientPrecision(why)) => {
            report.verdict = Verdict::Inconclusive(why);
            return Ok(report);
        }
        Err(e) => return Err(e),
    };
    let c = match tangent_map_matrix(f, gamma, &tsp) {
        Ok(c) => c,
        Err(TangentError::InsufficientPrecision(why)) => {
            report.verdict = Verdict::Inconclusive(why);
            return Ok(report);
        }
        Err(e) => return Err(e),
    };
    let snf = smith_normal_form(&c);
    report.divisors = snf.divisors().to_vec();
    report.injective = snf.divisors().iter().all(ValOrBound::is_finite);
    report.coker_dim = snf.divisor_sum();

    if !report.injective {
        report.verdict = Verdict::Inconclusive(
            "tangent map divisors unreadable at this precision".to_string(),
        );
        return Ok(report);
    }
    let sum = report.coker_dim.expect("all divisors finite");

    // Safety margin: never confirm a reading that truncation could touch.
    if e_val > prec / 2 || sum > prec / 2 {
        report.verdict = Verdict::Inconclusive(format!(
            "margin exceeded: e = {e_val}, divisor sum = {sum}, N = {prec}"
        ));
        return Ok(report);
    }

    report.verdict = if sum == e_val {
        Verdict::Confirmed
    } else {
        Verdict::Refuted
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arc::arc_validate;
    use crate::poly::{parse_poly, Vars};
    use crate::scalar::Field;

    fn f() -> Field {
        Field::Rationals
    }

    fn series(coeffs: &[i64], n: usize) -> TruncSeries {
        TruncSeries::from_coeffs(f(), coeffs.iter().map(|&c| f().from_i64(c)).collect(), n)
    }

    fn affine(names: Vec<&str>) -> AffinePresentation {
        AffinePresentation::affine_space(Vars::new(names), f())
    }

    fn morphism(src: AffinePresentation, tgt: AffinePresentation, comps: &[&str]) -> MorphismPresentation {
        let sv = src.ambient_vars().clone();
        let field = src.field();
        let comps = comps
            .iter()
            .map(|c| parse_poly(c, &sv, field).unwrap())
            .collect();
        MorphismPresentation::new(src, tgt, comps)
    }

    fn cone() -> AffinePresentation {
        let v = Vars::new(vec!["u", "v", "w"]);
        let eq = parse_poly("u*w - v^2", &v, f()).unwrap();
        AffinePresentation::new(v, vec![eq], 2, f())
    }

    #[test]
    fn tangent_space_of_affine_plane_is_free() {
        let a2 = affine(vec!["u", "v"]);
        let delta =
            arc_validate(&a2, vec![series(&[0, 1], 24), series(&[0, 1], 24)]).unwrap();
        let tsp = tangent_space_presentation(&a2, &delta).unwrap();
        assert_eq!(tsp.kernel_basis(), &SeriesMat::identity(2, f(), 24));
        assert_eq!(tsp.free_rank(), 2);
    }

    #[test]
    fn tangent_space_of_cone_at_diagonal_image() {
        let y = cone();
        let coords = vec![
            series(&[0, 0, 1], 24),
            series(&[0, 0, 1], 24),
            series(&[0, 0, 1], 24),
        ];
        let delta = arc_validate(&y, coords).unwrap();
        let tsp = tangent_space_presentation(&y, &delta).unwrap();
        let b = tsp.kernel_basis();
        assert_eq!((b.rows(), b.cols()), (3, 2));
        // saturated basis {(2,1,0), (-1,0,1)}
        assert_eq!(b.entry(0, 0), &series(&[2], 24));
        assert_eq!(b.entry(1, 0), &series(&[1], 24));
        assert_eq!(b.entry(2, 0), &series(&[0], 24));
        assert_eq!(b.entry(0, 1), &series(&[-1], 24));
        assert_eq!(b.entry(1, 1), &series(&[0], 24));
        assert_eq!(b.entry(2, 1), &series(&[1], 24));
    }

    #[test]
    fn tangent_space_of_line_in_plane() {
        let v = Vars::new(vec!["x", "y"]);
        let line = AffinePresentation::new(
            v.clone(),
            vec![parse_poly("y", &v, f()).unwrap()],
            1,
            f(),
        );
        let delta = arc_validate(&line, vec![series(&[0, 1], 24), series(&[], 24)]).unwrap();
        let tsp = tangent_space_presentation(&line, &delta).unwrap();
        let b = tsp.kernel_basis();
        assert_eq!((b.rows(), b.cols()), (2, 1));
        assert_eq!(b.entry(0, 0), &series(&[1], 24));
        assert_eq!(b.entry(1, 0), &series(&[], 24));
    }

    #[test]
    fn tangent_matrix_of_squaring() {
        let fm = morphism(affine(vec!["x"]), affine(vec!["u"]), &["x^2"]);
        let gamma = arc_validate(fm.source(), vec![series(&[0, 1], 24)]).unwrap();
        let delta = arc_pushforward(&fm, &gamma).unwrap();
        let tsp = tangent_space_presentation(fm.target(), &delta).unwrap();
        let c = tangent_map_matrix(&fm, &gamma, &tsp).unwrap();
        assert_eq!((c.rows(), c.cols()), (1, 1));
        assert_eq!(c.entry(0, 0), &series(&[0, 2], 24));
    }

    #[test]
    fn tangent_matrix_of_blowup_chart() {
        let fm = morphism(affine(vec!["x", "y"]), affine(vec!["u", "v"]), &["x", "x*y"]);
        let gamma = arc_validate(
            fm.source(),
            vec![series(&[0, 0, 1], 24), series(&[0, 0, 0, 1], 24)],
        )
        .unwrap();
        let delta = arc_pushforward(&fm, &gamma).unwrap();
        let tsp = tangent_space_presentation(fm.target(), &delta).unwrap();
        let c = tangent_map_matrix(&fm, &gamma, &tsp).unwrap();
        assert_eq!(c.entry(0, 0), &series(&[1], 24));
        assert_eq!(c.entry(0, 1), &series(&[], 24));
        assert_eq!(c.entry(1, 0), &series(&[0, 0, 0, 1], 24));
        assert_eq!(c.entry(1, 1), &series(&[0, 0, 1], 24));
    }

    #[test]
    fn tangent_matrix_of_cone_cover() {
        let fm = morphism(affine(vec!["s", "u"]), cone(), &["s^2", "s*u", "u^2"]);
        let gamma =
            arc_validate(fm.source(), vec![series(&[0, 1], 24), series(&[0, 1], 24)]).unwrap();
        let delta = arc_pushforward(&fm, &gamma).unwrap();
        let tsp = tangent_space_presentation(fm.target(), &delta).unwrap();
        let c = tangent_map_matrix(&fm, &gamma, &tsp).unwrap();
        // against the basis {(2,1,0), (-1,0,1)}: C = [[t, t], [0, 2t]]
        assert_eq!(c.entry(0, 0), &series(&[0, 1], 24));
        assert_eq!(c.entry(0, 1), &series(&[0, 1], 24));
        assert_eq!(c.entry(1, 0), &series(&[], 24));
        assert_eq!(c.entry(1, 1), &series(&[0, 2], 24));
    }

    #[test]
    fn bruteforce_coker_of_scaled_line() {
        let c = SeriesMat::from_rows(vec![vec![series(&[0, 2], 8)]], f(), 8);
        assert_eq!(coker_dim_bruteforce(&c).unwrap(), 1);
    }

    #[test]
    fn bruteforce_coker_of_identity() {
        let c = SeriesMat::identity(2, f(), 8);
        assert_eq!(coker_dim_bruteforce(&c).unwrap(), 0);
    }

    #[test]
    fn bruteforce_coker_of_blowup_matrix() {
        let c = SeriesMat::from_rows(
            vec![
                vec![series(&[1], 12), series(&[], 12)],
                vec![series(&[0, 0, 0, 1], 12), series(&[0, 0, 1], 12)],
            ],
            f(),
            12,
        );
        assert_eq!(coker_dim_bruteforce(&c).unwrap(), 2);
    }

    #[test]
    fn bruteforce_rejects_thin_margin() {
        let c = SeriesMat::from_rows(vec![vec![series(&[0, 0, 0, 0, 1], 8)]], f(), 8);
        assert!(matches!(
            coker_dim_bruteforce(&c),
            Err(TangentError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn verdict_squaring() {
        let fm = morphism(affine(vec!["x"]), affine(vec!["u"]), &["x^2"]);
        let gamma = arc_validate(fm.source(), vec![series(&[0, 1], 24)]).unwrap();
        let report = tangent_map_verdict(&fm, &gamma).unwrap();
        assert_eq!(report.e, ValOrBound::Finite(1));
        assert_eq!(report.divisors, vec![ValOrBound::Finite(1)]);
        assert!(report.injective);
        assert_eq!(report.coker_dim, Some(1));
        assert_eq!(report.verdict, Verdict::Confirmed);
    }

    #[test]
    fn verdict_blowup() {
        let fm = morphism(affine(vec!["x", "y"]), affine(vec!["u", "v"]), &["x", "x*y"]);
        let gamma = arc_validate(
            fm.source(),
            vec![series(&[0, 0, 1], 24), series(&[0, 0, 0, 1], 24)],
        )
        .unwrap();
        let report = tangent_map_verdict(&fm, &gamma).unwrap();
        assert_eq!(report.e, ValOrBound::Finite(2));
        assert_eq!(
            report.divisors,
            vec![ValOrBound::Finite(0), ValOrBound::Finite(2)]
        );
        assert_eq!(report.coker_dim, Some(2));
        assert_eq!(report.verdict, Verdict::Confirmed);
    }

    #[test]
    fn verdict_cone_cover() {
        let fm = morphism(affine(vec!["s", "u"]), cone(), &["s^2", "s*u", "u^2"]);
        let gamma =
            arc_validate(fm.source(), vec![series(&[0, 1], 24), series(&[0, 1], 24)]).unwrap();
        let report = tangent_map_verdict(&fm, &gamma).unwrap();
        assert_eq!(report.e, ValOrBound::Finite(2));
        assert_eq!(report.sing_check, ValOrBound::Finite(2));
        assert_eq!(
            report.divisors,
            vec![ValOrBound::Finite(1), ValOrBound::Finite(1)]
        );
        assert_eq!(report.coker_dim, Some(2));
        assert_eq!(report.verdict, Verdict::Confirmed);
    }

    #[test]
    fn verdict_frobenius_is_inconclusive() {
        let f5 = Field::prime(5).unwrap();
        let sv = Vars::new(vec!["x"]);
        let src = AffinePresentation::affine_space(sv.clone(), f5);
        let tgt = AffinePresentation::affine_space(Vars::new(vec!["u"]), f5);
        let frob = MorphismPresentation::new(
            src,
            tgt,
            vec![parse_poly("x^5", &sv, f5).unwrap()],
        );
        let t = TruncSeries::monomial(f5, 1, 24);
        let gamma = arc_validate(frob.source(), vec![t]).unwrap();
        let report = tangent_map_verdict(&frob, &gamma).unwrap();
        assert_eq!(report.e, ValOrBound::AtLeast(24));
        assert_eq!(
            report.verdict,
            Verdict::Inconclusive("e unreadable: AtLeast(24)".to_string())
        );
    }

    #[test]
    fn verdict_rejects_singular_center() {
        let v = Vars::new(vec!["x", "y"]);
        let cusp = AffinePresentation::new(
            v.clone(),
            vec![parse_poly("x^2 - y^3", &v, f()).unwrap()],
            1,
            f(),
        );
        let fm = MorphismPresentation::new(
            cusp,
            affine(vec!["u"]),
            vec![parse_poly("y", &v, f()).unwrap()],
        );
        let gamma = arc_validate(
            fm.source(),
            vec![series(&[0, 0, 0, 1], 24), series(&[0, 0, 1], 24)],
        )
        .unwrap();
        assert_eq!(
            tangent_map_verdict(&fm, &gamma).unwrap_err(),
            TangentError::SmoothnessFailure
        );
    }

    #[test]
    fn verdict_rejects_arc_inside_singular_target() {
        let fm = morphism(affine(vec!["s", "u"]), cone(), &["s^2", "s*u", "u^2"]);
        let zero = TruncSeries::zero(f(), 24);
        let gamma = arc_validate(fm.source(), vec![zero.clone(), zero]).unwrap();
        assert_eq!(
            tangent_map_verdict(&fm, &gamma).unwrap_err(),
            TangentError::SingularTargetArc(ValOrBound::AtLeast(24))
        );
    }

    #[test]
    fn verdict_on_smooth_source_with_equations() {
        // the line V(y) maps isomorphically to the affine line by x + y
        let v = Vars::new(vec!["x", "y"]);
        let line = AffinePresentation::new(
            v.clone(),
            vec![parse_poly("y", &v, f()).unwrap()],
            1,
            f(),
        );
        let fm = MorphismPresentation::new(
            line,
            affine(vec!["u"]),
            vec![parse_poly("x + y", &v, f()).unwrap()],
        );
        let gamma =
            arc_validate(fm.source(), vec![series(&[0, 1], 24), series(&[], 24)]).unwrap();
        let report = tangent_map_verdict(&fm, &gamma).unwrap();
        assert_eq!(report.e, ValOrBound::Finite(0));
        assert_eq!(report.coker_dim, Some(0));
        assert_eq!(report.verdict, Verdict::Confirmed);
    }
}
