//! Scalar abstraction and angle helpers shared by every module.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating point scalar the planner is generic over (`f32` or `f64`).
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
}

impl<T> Real for T where
    T: Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
}

/// Converts an `f64` literal into `T`.
#[inline]
pub fn lit<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("literal representable in scalar type")
}

/// Converts a count into `T`.
#[inline]
pub fn count<T: Real>(n: usize) -> T {
    T::from_usize(n).expect("count representable in scalar type")
}

/// Residue snapped to zero when it lands this close below a full turn.
///
/// Rounding in `x mod 2π` can leave `2π - ulp` for an input that is
/// mathematically a multiple of 2π; those are vanished arcs, not full loops.
#[inline]
fn wrap_snap<T: Real>() -> T {
    T::epsilon() * lit(64.0) * T::TAU()
}

/// Maps an angle into `[0, 2π)`. Negative inputs wrap up.
pub fn wrap_angle<T: Real>(x: T) -> T {
    let tau = T::TAU();
    let mut r = x % tau;
    if r < T::zero() {
        r = r + tau;
    }
    if r >= tau - wrap_snap::<T>() || r == T::zero() {
        return T::zero();
    }
    r
}

/// Wraps a swept arc angle into `[0, 2π)`, reading anything within
/// `1e-10` rad (or a few ulps for `f32`) below a full turn as a vanished
/// arc. Rounding in the tangent construction near a mode transition leaves
/// residues of order `1e-13` on either side of zero.
pub fn wrap_arc<T: Real>(x: T) -> T {
    let snap = lit::<T>(1e-10).max(wrap_snap::<T>());
    let w = wrap_angle(x);
    if w >= T::TAU() - snap {
        T::zero()
    } else {
        w
    }
}

/// Maps an angle into `(-π, π]`.
pub fn signed_angle<T: Real>(x: T) -> T {
    let w = wrap_angle(x);
    if w > T::PI() {
        w - T::TAU()
    } else {
        w
    }
}

/// Smallest absolute difference between two angles.
pub fn angle_distance<T: Real>(a: T, b: T) -> T {
    signed_angle(a - b).abs()
}
