//! The discretised Bloch sphere.
//!
//! A [`DiscreteState`] `(p, n, m)` has squared amplitude `n/p` on `|0⟩` and
//! relative phase `m/p` turns. Exact orientations live on an N×N grid:
//! latitude `j` has `cos θ = 1 − 2j/N` (rational by construction) and
//! longitude `k` has `φ = k/N` turns. Continuous orientations snap to the
//! nearest grid point by great-circle angle.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::angle::{cos_as_surd, RationalAngle};
use crate::error::GridError;
use crate::Rational;

/// Two snap deltas closer than this are treated as equal.
pub const DELTA_SEPARATION: f64 = 1e-6;

/// Angular ties within this tolerance fall back to the `(j, k)` order.
const TIE_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Eigenstate {
    Zero,
    One,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiscreteState {
    p: u64,
    n: u64,
    m: u64,
}

impl DiscreteState {
    pub fn new(p: u64, n: u64, m: u64) -> Result<Self, GridError> {
        if p == 0 {
            return Err(GridError::ZeroP);
        }
        if n > p || m >= p {
            return Err(GridError::StateOutOfRange { p, n, m });
        }
        Ok(DiscreteState { p, n, m })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn phase(&self) -> RationalAngle {
        RationalAngle::new(self.m as i64, self.p as i64).expect("p is positive")
    }
}

pub fn born_probability(state: &DiscreteState, outcome: Eigenstate) -> Rational {
    let weight = match outcome {
        Eigenstate::Zero => state.n,
        Eigenstate::One => state.p - state.n,
    };
    Rational::new(weight as i64, state.p as i64).expect("p is positive")
}

/// A grid point: `cos θ = 1 − 2j/N`, `φ = k/N` turns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GridDirection {
    resolution: u32,
    j: u32,
    k: u32,
}

impl GridDirection {
    /// Longitude is forced to `k = 0` at the poles.
    pub fn new(resolution: u32, j: u32, k: u32) -> Result<Self, GridError> {
        if resolution < 2 {
            return Err(GridError::ResolutionTooSmall(resolution));
        }
        if j > resolution || k >= resolution {
            return Err(GridError::IndexOutOfRange { resolution, j, k });
        }
        let k = if j == 0 || j == resolution { 0 } else { k };
        Ok(GridDirection { resolution, j, k })
    }

    pub fn resolution(&self) -> u32 {
        self.resolution
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn is_pole(&self) -> bool {
        self.j == 0 || self.j == self.resolution
    }

    pub fn cos_theta(&self) -> Rational {
        Rational::ONE - Rational::new(2 * self.j as i64, self.resolution as i64).expect("N >= 2")
    }

    pub fn longitude(&self) -> RationalAngle {
        RationalAngle::new(self.k as i64, self.resolution as i64).expect("N >= 2")
    }

    pub fn to_continuous(&self) -> ContinuousDirection {
        let theta = self.cos_theta().to_f64().clamp(-1.0, 1.0).acos();
        ContinuousDirection {
            theta,
            phi: self.longitude().radians(),
        }
    }

    /// Every grid point at resolution `N`, in `(j, k)` order.
    pub fn all(resolution: u32) -> Result<Vec<GridDirection>, GridError> {
        if resolution < 2 {
            return Err(GridError::ResolutionTooSmall(resolution));
        }
        let mut out = Vec::new();
        for j in 0..=resolution {
            let ks = if j == 0 || j == resolution {
                1
            } else {
                resolution
            };
            for k in 0..ks {
                out.push(GridDirection { resolution, j, k });
            }
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ContinuousDirection {
    theta: f64,
    phi: f64,
}

impl ContinuousDirection {
    pub fn new(theta: f64, phi: f64) -> Result<Self, GridError> {
        if !(0.0..=PI).contains(&theta) || !(0.0..TAU).contains(&phi) {
            return Err(GridError::DirectionOutOfRange { theta, phi });
        }
        Ok(ContinuousDirection { theta, phi })
    }

    /// Wraps `phi` into `[0, 2π)` and clamps `theta` into `[0, π]`.
    pub fn normalized(theta: f64, phi: f64) -> Self {
        ContinuousDirection {
            theta: theta.clamp(0.0, PI),
            phi: phi.rem_euclid(TAU),
        }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn unit_vector(&self) -> [f64; 3] {
        let (st, ct) = self.theta.sin_cos();
        let (sp, cp) = self.phi.sin_cos();
        [st * cp, st * sp, ct]
    }
}

/// Angle between two directions, accurate near 0 and π.
pub fn great_circle_angle(a: &ContinuousDirection, b: &ContinuousDirection) -> f64 {
    let u = a.unit_vector();
    let v = b.unit_vector();
    let cross = [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ];
    let sin = (cross[0] * cross[0] + cross[1] * cross[1] + cross[2] * cross[2]).sqrt();
    let cos = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
    sin.atan2(cos)
}

/// The discrete state of a system prepared along `prep`, written in the basis
/// of a device oriented along `dev`, when it exists at discretisation `p`.
///
/// `cos γ = cos θ₁ cos θ₂ + sin θ₁ sin θ₂ cos Δφ` is evaluated exactly: the
/// sine product is `√((1 − c₁²)(1 − c₂²))` and `cos Δφ` is a single surd or
/// irrational, so `cos γ` is rational only when their product collapses to a
/// rational. The squared amplitude `(1 + cos γ)/2` and the azimuth offset
/// `Δφ` must both be expressible over `p`.
pub fn state_between(
    dev: &GridDirection,
    prep: &GridDirection,
    p: u64,
) -> Result<Option<DiscreteState>, GridError> {
    if dev.resolution != prep.resolution {
        return Err(GridError::ResolutionMismatch(
            dev.resolution,
            prep.resolution,
        ));
    }
    if p == 0 {
        return Err(GridError::ZeroP);
    }
    let c1 = dev.cos_theta();
    let c2 = prep.cos_theta();
    let sin_sq = (Rational::ONE - c1 * c1) * (Rational::ONE - c2 * c2);
    let azimuth = RationalAngle::from_turns(prep.longitude().turns() - dev.longitude().turns());

    let cross = if sin_sq.is_zero() {
        Rational::ZERO
    } else {
        let Some(surd) = cos_as_surd(azimuth) else {
            return Ok(None);
        };
        let Some(root) = (sin_sq * Rational::integer(surd.radicand as i64)).sqrt_exact() else {
            return Ok(None);
        };
        surd.coefficient * root
    };
    let cos_gamma = c1 * c2 + cross;
    let amplitude_sq = (Rational::ONE + cos_gamma) * Rational::HALF;

    let p_i = p as i64;
    let (Some(n), Some(m)) = (
        amplitude_sq.numerator_over(p_i),
        azimuth.turns().numerator_over(p_i),
    ) else {
        return Ok(None);
    };
    Ok(Some(DiscreteState::new(p, n as u64, m as u64)?))
}

/// Nearest grid point by great-circle angle; ties go to smaller `j`, then smaller `k`.
pub fn snap_to_grid(d: &ContinuousDirection, resolution: u32) -> Result<GridDirection, GridError> {
    if resolution < 2 {
        return Err(GridError::ResolutionTooSmall(resolution));
    }
    let n = resolution as f64;
    let x = d.phi / TAU * n;
    let k0 = (x.floor() as i64).rem_euclid(resolution as i64) as u32;
    let k1 = (k0 + 1) % resolution;
    let mut ring = [k0.min(k1), k0.max(k1)];

    let mut best: Option<(f64, GridDirection)> = None;
    for j in 0..=resolution {
        let candidates: &[u32] = if j == 0 || j == resolution {
            &[0]
        } else {
            ring.sort_unstable();
            &ring
        };
        for &k in candidates {
            let g = GridDirection { resolution, j, k };
            let angle = great_circle_angle(d, &g.to_continuous());
            match best {
                Some((b, _)) if angle >= b - TIE_EPS => {}
                _ => best = Some((angle, g)),
            }
        }
    }
    Ok(best.expect("grid is non-empty").1)
}

/// Great-circle angle between `d` and its snapped grid point, in `[0, π]`.
pub fn snap_delta(d: &ContinuousDirection, resolution: u32) -> Result<f64, GridError> {
    let g = snap_to_grid(d, resolution)?;
    Ok(great_circle_angle(d, &g.to_continuous()))
}

/// `count` near-uniform directions on a golden-angle spiral, north to south.
pub fn fibonacci_sphere(count: usize) -> Vec<ContinuousDirection> {
    let golden = PI * (3.0 - 5f64.sqrt());
    (0..count)
        .map(|i| {
            let z = 1.0 - (2 * i + 1) as f64 / count as f64;
            ContinuousDirection::normalized(z.acos(), golden * i as f64)
        })
        .collect()
}

/// Two directions whose snap deltas differ by more than [`DELTA_SEPARATION`].
///
/// Scans pairs from a fixed 100-point spiral in order. If every spiral point
/// happened to share one delta, a pole (delta 0) paired with a point half a
/// latitude step off the pole is returned instead.
pub fn snap_delta_counterexample(
    resolution: u32,
) -> Result<(ContinuousDirection, ContinuousDirection), GridError> {
    let candidates = fibonacci_sphere(100);
    let deltas = candidates
        .iter()
        .map(|d| snap_delta(d, resolution))
        .collect::<Result<Vec<_>, _>>()?;
    for i in 0..candidates.len() {
        for j in i + 1..candidates.len() {
            if (deltas[i] - deltas[j]).abs() > DELTA_SEPARATION {
                return Ok((candidates[i], candidates[j]));
            }
        }
    }
    let first_ring = (1.0 - 2.0 / resolution as f64).acos();
    let pole = ContinuousDirection::normalized(0.0, 0.0);
    Ok((pole, ContinuousDirection::normalized(first_ring / 2.0, 0.0)))
}
