//! Tangent weights of the moduli space at a fixed component.
//!
//! The ambient space of a stratum carries weights `W`; the orbit of the
//! structure group contributes `G`. The stratum tangent is `W − G` (with the
//! stabiliser added back in `M1`) and deeper strata add their normal weights.

use std::fmt;

use serde::Serialize;

use crate::catalog::{Family, FixedComponent, Kind, LiftData, Stratum};
use crate::error::{Error, Result};
use crate::golden::MODULI_DIMENSION;
use crate::weights::{msub, msub_strict, sigma, Character, WeightMultiset};

/// Largest absolute coordinate a tangent weight may have.
pub const WEIGHT_BOUND: i64 = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TangentModel {
    pub component_id: String,
    #[serde(serialize_with = "serialize_weights")]
    pub weights: WeightMultiset,
    pub chi0_multiplicity: usize,
    pub normal_chi0_multiplicity: usize,
}

fn serialize_weights<S: serde::Serializer>(
    w: &WeightMultiset,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(w.iter().map(|(c, n)| (c.coords(), n)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum LimitClass {
    Interior,
    LineLimit,
    SurfaceLimit,
}

impl fmt::Display for LimitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LimitClass::Interior => "interior",
            LimitClass::LineLimit => "line-limit",
            LimitClass::SurfaceLimit => "surface-limit",
        })
    }
}

fn check_arity(stratum: Stratum, u: &[Character], v: &[Character]) -> Result<()> {
    let expected = stratum.arity();
    if (u.len(), v.len()) != expected {
        return Err(Error::ArityMismatch {
            stratum,
            expected,
            found: (u.len(), v.len()),
        });
    }
    Ok(())
}

/// Accumulates blocks `shift(base, σ^l)` and singletons.
#[derive(Default)]
struct Blocks(WeightMultiset);

impl Blocks {
    fn block(&mut self, base: Character, l: i64) -> &mut Self {
        self.0.extend_from(&sigma::sigma(l).shift(base));
        self
    }

    fn one(&mut self, c: Character) -> &mut Self {
        self.0.insert(c);
        self
    }

    fn done(&mut self) -> WeightMultiset {
        std::mem::take(&mut self.0)
    }
}

/// Weights of the ambient representation space of a stratum.
pub fn weights_w(stratum: Stratum, u: &[Character], v: &[Character]) -> Result<WeightMultiset> {
    check_arity(stratum, u, v)?;
    let mut b = Blocks::default();
    let e = |r: usize, s: usize| -v[r] - u[s];
    match stratum {
        Stratum::M0 => {
            for r in 0..3 {
                b.block(e(r, 0), 2).block(e(r, 1), 2).block(e(r, 2), 1);
            }
        }
        Stratum::M1 => {
            b.block(e(0, 0), 1)
                .block(e(0, 1), 1)
                .one(e(0, 2))
                .one(e(0, 3));
            for r in 1..4 {
                b.block(e(r, 0), 2)
                    .block(e(r, 1), 2)
                    .block(e(r, 2), 1)
                    .block(e(r, 3), 1);
            }
        }
        Stratum::M2 => {
            for (r, l) in [(0, 1), (1, 1), (2, 3)] {
                for s in 0..3 {
                    b.block(e(r, s), l);
                }
            }
        }
        Stratum::M3 => {
            b.block(e(0, 0), 3)
                .block(e(0, 1), 1)
                .block(e(1, 0), 4)
                .block(e(1, 1), 2);
        }
    }
    Ok(b.done())
}

/// Weights of the Lie algebra of the structure group acting on the stratum.
pub fn weights_g(stratum: Stratum, u: &[Character], v: &[Character]) -> Result<WeightMultiset> {
    check_arity(stratum, u, v)?;
    let o = Character::ZERO;
    let mut b = Blocks::default();
    match stratum {
        Stratum::M0 => {
            for a in 0..2 {
                b.one(u[a] - u[0]).one(u[a] - u[1]);
                for r in 0..3 {
                    b.one(v[r] - v[a]);
                }
            }
            b.block(u[2] - u[0], 1).block(u[2] - u[1], 1);
            for r in 0..3 {
                b.one(v[r] - v[2]);
            }
        }
        Stratum::M1 => {
            for k in 1..4 {
                b.block(v[0] - v[k], 1);
                for r in 1..4 {
                    b.one(v[r] - v[k]);
                }
            }
            b.one(o).one(o).one(o).one(o);
            b.one(u[0] - u[1])
                .one(u[1] - u[0])
                .one(u[2] - u[3])
                .one(u[3] - u[2]);
            for a in 2..4 {
                b.block(u[a] - u[0], 1).block(u[a] - u[1], 1);
            }
        }
        Stratum::M2 => {
            for i in 0..3 {
                for j in 0..3 {
                    b.one(u[i] - u[j]);
                }
            }
            b.one(o).one(o).one(v[1] - v[0]).one(v[0] - v[1]);
            b.block(v[0] - v[2], 2).block(v[1] - v[2], 2);
        }
        Stratum::M3 => {
            b.one(o).one(o).one(o);
            b.block(u[1] - u[0], 2).block(v[0] - v[1], 1);
        }
    }
    Ok(b.done())
}

/// `(W − (G − stabiliser)) ⊎ normal`, with strict containment and no further checks.
pub fn raw_weights(stratum: Stratum, lift: &LiftData) -> Result<WeightMultiset> {
    let w = weights_w(stratum, &lift.u, &lift.v)?;
    let g = msub(&weights_g(stratum, &lift.u, &lift.v)?, &lift.stabilizer);
    let mut t = msub_strict(&w, &g)?;
    t.extend_from(&lift.normal);
    Ok(t)
}

fn lift_of(c: &FixedComponent) -> LiftData {
    LiftData {
        u: c.u_list.clone(),
        v: c.v_list.clone(),
        stabilizer: c.stabilizer_weights.clone(),
        normal: c.normal_weights.clone(),
    }
}

/// The 26 tangent weights at `c`, for the base orientation.
///
/// Fails on broken containment, a wrong count or an out-of-range weight.
/// The zero-weight count is recorded, not checked, so that this also works for
/// candidate components that the catalog excludes.
pub fn tangent_weights(c: &FixedComponent) -> Result<TangentModel> {
    let weights = raw_weights(c.stratum, &lift_of(c)).map_err(|e| match e {
        Error::ContainmentViolation { missing, .. } => Error::ContainmentViolation {
            missing,
            component: Some(c.id.clone()),
        },
        other => other,
    })?;
    if weights.cardinality() != MODULI_DIMENSION {
        return Err(Error::DimensionViolation {
            component: c.id.clone(),
            expected: MODULI_DIMENSION,
            found: weights.cardinality(),
        });
    }
    if let Some(weight) = weights
        .iter()
        .map(|(w, _)| w)
        .find(|w| w.max_abs_coord() > WEIGHT_BOUND)
    {
        return Err(Error::RangeViolation {
            component: c.id.clone(),
            weight,
        });
    }
    let normal_chi0_multiplicity = match c.stratum {
        Stratum::M0 => 0,
        _ => normal_weights(c)?.chi0_multiplicity(),
    };
    Ok(TangentModel {
        component_id: c.id.clone(),
        chi0_multiplicity: weights.chi0_multiplicity(),
        normal_chi0_multiplicity,
        weights,
    })
}

/// Like [`tangent_weights`] but also requires the zero-weight count to equal the dimension.
pub fn checked_tangent_weights(c: &FixedComponent) -> Result<TangentModel> {
    let t = tangent_weights(c)?;
    if t.chi0_multiplicity != c.dimension() {
        return Err(Error::Chi0Mismatch {
            component: c.id.clone(),
            expected: c.dimension(),
            found: t.chi0_multiplicity,
        });
    }
    Ok(t)
}

/// Weights of the normal space of the stratum at `c`.
pub fn normal_weights(c: &FixedComponent) -> Result<WeightMultiset> {
    match c.stratum {
        Stratum::M0 => Err(Error::WrongStratum {
            component: c.id.clone(),
            stratum: c.stratum,
        }),
        Stratum::M1 => {
            check_arity(c.stratum, &c.u_list, &c.v_list)?;
            let v1 = c.v_list[0];
            Ok([-v1 - c.u_list[2], -v1 - c.u_list[3]].into_iter().collect())
        }
        Stratum::M2 | Stratum::M3 => Ok(c.normal_weights.clone()),
    }
}

pub fn normal_chi0(c: &FixedComponent) -> Result<usize> {
    Ok(normal_weights(c)?.chi0_multiplicity())
}

/// Whether `c` is a limit of a positive-dimensional family of fixed sheaves.
///
/// Open-stratum families other than `δ` are always interior. For `δ` the
/// zero-weight excess over the component's own dimension decides; a total of
/// two zero weights means the point lies on a fixed surface. Deeper strata
/// use the zero weights of the normal space.
pub fn classify_limit(c: &FixedComponent) -> Result<LimitClass> {
    let by_count = |n: usize| match n {
        0 => LimitClass::Interior,
        1 => LimitClass::LineLimit,
        _ => LimitClass::SurfaceLimit,
    };
    match c.stratum {
        Stratum::M0 if c.family != Family::Delta => Ok(LimitClass::Interior),
        Stratum::M0 => {
            let t = tangent_weights(c)?;
            if t.chi0_multiplicity <= c.dimension() {
                Ok(LimitClass::Interior)
            } else {
                Ok(by_count(t.chi0_multiplicity))
            }
        }
        _ => Ok(by_count(normal_chi0(c)?)),
    }
}

/// Zero weights of the stratum tangent alone (total minus normal).
///
/// A quintic `d` of a deeper-stratum family carries a fixed line exactly when
/// this is 1.
pub fn stratum_chi0(c: &FixedComponent) -> Result<usize> {
    let t = tangent_weights(c)?;
    Ok(t.chi0_multiplicity - t.normal_chi0_multiplicity.min(t.chi0_multiplicity))
}

/// Kind a candidate would need for its zero-weight count to match.
pub fn kind_for_chi0(n: usize) -> Option<Kind> {
    match n {
        0 => Some(Kind::Point),
        1 => Some(Kind::Line),
        2 => Some(Kind::Surface),
        _ => None,
    }
}
