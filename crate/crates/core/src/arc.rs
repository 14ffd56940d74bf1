//! Arcs as truncated power-series points of a presented scheme: validation,
//! pushforward along a morphism, and orders of vanishing along subschemes.

use crate::error::ArcError;
use crate::poly::MultiPoly;
use crate::scalar::Field;
use crate::scheme::{singular_locus_ideal, AffinePresentation, MorphismPresentation};
use crate::series::{TruncSeries, ValOrBound};

/// A truncated arc: one series per ambient variable of the carrying scheme,
/// satisfying the scheme's equations to the shared precision.
///
/// Construct through [`arc_validate`]; the constructor is the proof that the
/// equations vanish to precision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    coords: Vec<TruncSeries>,
}

impl Arc {
    pub fn coords(&self) -> &[TruncSeries] {
        &self.coords
    }

    pub fn precision(&self) -> usize {
        self.coords[0].precision()
    }

    pub fn field(&self) -> Field {
        self.coords[0].field()
    }
}

/// Checks that `coords` satisfies every equation of `x` to precision and
/// wraps it as an [`Arc`].
///
/// A passing check is a necessary condition for a true arc: equations that
/// vanish to precision might still be nonzero beyond it.
pub fn arc_validate(
    x: &AffinePresentation,
    coords: Vec<TruncSeries>,
) -> Result<Arc, ArcError> {
    if coords.len() != x.ambient_dim() {
        return Err(crate::error::AlgebraError::ArityMismatch {
            expected: x.ambient_dim(),
            got: coords.len(),
        }
        .into());
    }
    for (index, eq) in x.equations().iter().enumerate() {
        let value = eq.eval_series(&coords).map_err(ArcError::Algebra)?;
        if let ValOrBound::Finite(witness) = value.val() {
            return Err(ArcError::NotOnScheme { index, witness });
        }
    }
    Ok(Arc { coords })
}

/// Pushes an arc forward along a morphism by evaluating each component; the
/// image is validated against the target presentation at the same precision.
///
/// A `NotOnScheme` failure here signals an ill-defined morphism
/// presentation, not a bad arc.
pub fn arc_pushforward(f: &MorphismPresentation, gamma: &Arc) -> Result<Arc, ArcError> {
    assert_eq!(
        gamma.coords.len(),
        f.source().ambient_dim(),
        "arc not carried by the morphism's source"
    );
    let mut coords = Vec::with_capacity(f.components().len());
    for c in f.components() {
        coords.push(c.eval_series(gamma.coords()).map_err(ArcError::Algebra)?);
    }
    arc_validate(f.target(), coords)
}

/// The order of vanishing of the ideal spanned by `generators` along the
/// arc: the minimum valuation of the pulled-back generators.
///
/// A finite minimum dominates any `AtLeast` bound; the result is
/// `AtLeast(N)` only when every generator is indistinguishable from zero.
/// The generator list must be explicit — pass `[0]` or `[1]`, never `[]`.
pub fn ord_along(generators: &[MultiPoly], gamma: &Arc) -> Result<ValOrBound, ArcError> {
    if generators.is_empty() {
        return Err(ArcError::EmptyIdeal);
    }
    let mut acc = ValOrBound::AtLeast(gamma.precision());
    for g in generators {
        let value = g.eval_series(gamma.coords()).map_err(ArcError::Algebra)?;
        acc = acc.min_with(value.val());
    }
    Ok(acc)
}

/// True iff the arc's center is a smooth point of `x`: the singular locus
/// ideal has order exactly zero along the arc.
///
/// Local smoothness at the center is what the germ computations need;
/// global smoothness is neither checkable nor required here.
pub fn check_smooth_along(x: &AffinePresentation, gamma: &Arc) -> Result<bool, ArcError> {
    let ord = ord_along(&singular_locus_ideal(x), gamma)?;
    Ok(ord == ValOrBound::Finite(0))
}

/// The order of the singular locus of `y` along `delta`. A finite result
/// certifies the arc is not contained in the singular locus; `AtLeast(N)`
/// is inconclusive and must not be treated as membership.
pub fn check_not_in_sing_arcs(
    y: &AffinePresentation,
    delta: &Arc,
) -> Result<ValOrBound, ArcError> {
    ord_along(&singular_locus_ideal(y), delta)
}
