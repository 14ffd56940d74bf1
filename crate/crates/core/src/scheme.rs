//! Presentations of affine schemes and morphisms, Jacobians, Fitting ideals,
//! singular loci, and the ramification subscheme of a morphism.

use std::collections::HashMap;

use itertools::Itertools;

use crate::matrix::SeriesMat;
use crate::poly::{MultiPoly, Vars};
use crate::scalar::Field;
use crate::series::TruncSeries;

/// A closed subscheme of affine space: ambient variables, defining
/// equations, and the declared pure dimension.
///
/// The dimension is an input, not computed: all downstream rank and corank
/// checks compare against it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffinePresentation {
    ambient_vars: Vars,
    equations: Vec<MultiPoly>,
    declared_dim: usize,
    field: Field,
}

impl AffinePresentation {
    pub fn new(
        ambient_vars: Vars,
        equations: Vec<MultiPoly>,
        declared_dim: usize,
        field: Field,
    ) -> AffinePresentation {
        assert!(
            declared_dim <= ambient_vars.len(),
            "declared dimension exceeds ambient dimension"
        );
        for eq in &equations {
            assert_eq!(eq.vars(), &ambient_vars, "equation over wrong variable list");
            assert_eq!(eq.field(), field, "equation over wrong field");
        }
        AffinePresentation {
            ambient_vars,
            equations,
            declared_dim,
            field,
        }
    }

    /// Affine space `A^n` itself: no equations.
    pub fn affine_space(vars: Vars, field: Field) -> AffinePresentation {
        let n = vars.len();
        AffinePresentation::new(vars, Vec::new(), n, field)
    }

    pub fn ambient_vars(&self) -> &Vars {
        &self.ambient_vars
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_vars.len()
    }

    pub fn equations(&self) -> &[MultiPoly] {
        &self.equations
    }

    pub fn declared_dim(&self) -> usize {
        self.declared_dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_affine_space(&self) -> bool {
        self.equations.is_empty()
    }
}

/// A morphism between presented affine schemes of the same declared
/// dimension, given by one polynomial component per target ambient variable.
///
/// That target equations pull back into the source ideal is not checked
/// symbolically; it is verified along every arc that is pushed forward.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismPresentation {
    source: AffinePresentation,
    target: AffinePresentation,
    components: Vec<MultiPoly>,
}

impl MorphismPresentation {
    pub fn new(
        source: AffinePresentation,
        target: AffinePresentation,
        components: Vec<MultiPoly>,
    ) -> MorphismPresentation {
        assert_eq!(
            components.len(),
            target.ambient_dim(),
            "one component per target ambient variable"
        );
        assert_eq!(
            source.declared_dim(),
            target.declared_dim(),
            "source and target must have the same declared dimension"
        );
        assert_eq!(source.field(), target.field(), "field mismatch");
        for c in &components {
            assert_eq!(c.vars(), source.ambient_vars(), "component over wrong variables");
        }
        MorphismPresentation {
            source,
            target,
            components,
        }
    }

    pub fn source(&self) -> &AffinePresentation {
        &self.source
    }

    pub fn target(&self) -> &AffinePresentation {
        &self.target
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    pub fn field(&self) -> Field {
        self.source.field()
    }
}

/// A rectangular matrix of polynomials presenting a module: `rows`
/// generators, `cols` relations (the module is the cokernel of the map
/// given by the columns).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<MultiPoly>,
    vars: Vars,
    field: Field,
}

impl PresentationMatrix {
    pub fn from_rows(rows: Vec<Vec<MultiPoly>>, vars: &Vars, field: Field) -> PresentationMatrix {
        let nrows = rows.len();
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "ragged matrix");
            for p in row {
                assert_eq!(p.vars(), vars);
                assert_eq!(p.field(), field);
                entries.push(p);
            }
        }
        PresentationMatrix {
            rows: nrows,
            cols: ncols,
            entries,
            vars: vars.clone(),
            field,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &MultiPoly {
        assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }

    pub fn transpose(&self) -> PresentationMatrix {
        let mut rows = Vec::with_capacity(self.cols);
        for j in 0..self.cols {
            rows.push((0..self.rows).map(|i| self.entry(i, j).clone()).collect());
        }
        // An r x 0 transpose must keep the column count of the original rows.
        if self.cols == 0 {
            return PresentationMatrix {
                rows: 0,
                cols: self.rows,
                entries: Vec::new(),
                vars: self.vars.clone(),
                field: self.field,
            };
        }
        PresentationMatrix::from_rows(rows, &self.vars, self.field)
    }

    /// Evaluates every entry along an arc's coordinates.
    pub fn eval_along(&self, coords: &[TruncSeries]) -> SeriesMat {
        let prec = coords
            .first()
            .map(|s| s.precision())
            .expect("eval_along needs at least one coordinate");
        let field = coords[0].field();
        SeriesMat::from_fn(self.rows, self.cols, field, prec, |i, j| {
            self.entry(i, j)
                .eval_series(coords)
                .expect("presentation entries share the arc's variables")
        })
    }

    /// Determinant of the square submatrix given by `row_idx` x `col_idx`,
    /// by Laplace expansion memoized over column subsets.
    fn minor_det(&self, row_idx: &[usize], col_idx: &[usize]) -> MultiPoly {
        assert_eq!(row_idx.len(), col_idx.len());
        let k = row_idx.len();
        if k == 0 {
            return MultiPoly::one(&self.vars, self.field);
        }
        let full: u64 = (0..k).fold(0, |m, j| m | (1 << j));
        let mut memo: HashMap<u64, MultiPoly> = HashMap::new();
        self.minor_det_rec(row_idx, col_idx, full, &mut memo)
    }

    fn minor_det_rec(
        &self,
        row_idx: &[usize],
        col_idx: &[usize],
        mask: u64,
        memo: &mut HashMap<u64, MultiPoly>,
    ) -> MultiPoly {
        if mask == 0 {
            return MultiPoly::one(&self.vars, self.field);
        }
        if let Some(p) = memo.get(&mask) {
            return p.clone();
        }
        // Expand along the row indexed by how many columns are already used.
        let k = col_idx.len();
        let remaining = mask.count_ones() as usize;
        let row = row_idx[k - remaining];
        let mut acc = MultiPoly::zero(&self.vars, self.field);
        let mut sign_flip = false;
        for (j, &col) in col_idx.iter().enumerate() {
            if mask & (1 << j) == 0 {
                continue;
            }
            let entry = self.entry(row, col);
            if !entry.is_zero() {
                let sub = self.minor_det_rec(row_idx, col_idx, mask & !(1 << j), memo);
                let term = entry.mul(&sub);
                acc = if sign_flip { acc.sub(&term) } else { acc.add(&term) };
            }
            sign_flip = !sign_flip;
        }
        memo.insert(mask, acc.clone());
        acc
    }

    /// All `k x k` minors, enumerated with row subsets lexicographic-major
    /// and column subsets lexicographic-minor.
    pub fn minors(&self, k: usize) -> Vec<MultiPoly> {
        let mut out = Vec::new();
        for row_idx in (0..self.rows).combinations(k) {
            for col_idx in (0..self.cols).combinations(k) {
                out.push(self.minor_det(&row_idx, &col_idx));
            }
        }
        out
    }
}

/// The Jacobian matrix: entry `(i, j)` is the partial of equation `i` with
/// respect to variable `j`. Rows index equations, columns index variables.
pub fn jacobian(equations: &[MultiPoly], vars: &Vars, field: Field) -> PresentationMatrix {
    let rows: Vec<Vec<MultiPoly>> = equations
        .iter()
        .map(|eq| (0..vars.len()).map(|j| eq.partial(j)).collect())
        .collect();
    if equations.is_empty() {
        return PresentationMatrix {
            rows: 0,
            cols: vars.len(),
            entries: Vec::new(),
            vars: vars.clone(),
            field,
        };
    }
    PresentationMatrix::from_rows(rows, vars, field)
}

/// Generators of the `r`-th Fitting ideal of the module presented by `p`
/// with `b = p.rows()` generators: all `(b - r)`-minors.
///
/// Returns `[1]` when `r >= b` and `[0]` when `b - r` exceeds a matrix
/// dimension (no minors of that size exist).
pub fn fitting_ideal(p: &PresentationMatrix, r: usize) -> Vec<MultiPoly> {
    let b = p.rows();
    if r >= b {
        return vec![MultiPoly::one(&p.vars, p.field)];
    }
    let k = b - r;
    if k > p.rows() || k > p.cols() {
        return vec![MultiPoly::zero(&p.vars, p.field)];
    }
    p.minors(k)
}

/// Presents the relative differentials of a morphism: one generator per
/// source ambient variable, with relation columns the gradients of the
/// morphism components followed by the gradients of the source equations.
pub fn relative_differentials_presentation(f: &MorphismPresentation) -> PresentationMatrix {
    let vars = f.source().ambient_vars();
    let field = f.field();
    let m = vars.len();
    let comp_jac = jacobian(f.components(), vars, field);
    let eq_jac = jacobian(f.source().equations(), vars, field);
    let mut rows = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = Vec::with_capacity(comp_jac.rows() + eq_jac.rows());
        for j in 0..comp_jac.rows() {
            row.push(comp_jac.entry(j, i).clone());
        }
        for j in 0..eq_jac.rows() {
            row.push(eq_jac.entry(j, i).clone());
        }
        rows.push(row);
    }
    PresentationMatrix::from_rows(rows, vars, field)
}

/// Generators of the ideal of the ramification subscheme: the zeroth
/// Fitting ideal of the relative differentials.
pub fn ramification_ideal(f: &MorphismPresentation) -> Vec<MultiPoly> {
    fitting_ideal(&relative_differentials_presentation(f), 0)
}

/// Generators cutting out the singular locus: the defining equations
/// together with the `n`-th Fitting ideal of the differentials.
///
/// For affine space this is the unit ideal.
pub fn singular_locus_ideal(y: &AffinePresentation) -> Vec<MultiPoly> {
    let jac_t = jacobian(y.equations(), y.ambient_vars(), y.field()).transpose();
    let fitt = fitting_ideal(&jac_t, y.declared_dim());
    let mut out: Vec<MultiPoly> = y.equations().to_vec();
    out.extend(fitt);
    out
}
