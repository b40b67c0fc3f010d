use serde::Serialize;

use super::TrigError;
use crate::scalar::Real;

/// Tangent on `[0, π/2)` evaluated only through tangents of arcs up to
/// `π/4`: beyond it, `tan θ = 1 / tan(π/2 - θ)`.
pub fn tan_reduced<T: Real>(theta: T) -> Result<T, TrigError> {
    tan_reduced_probed(theta, |_| {})
}

/// As [`tan_reduced`], reporting each base argument passed to `tan`.
pub fn tan_reduced_probed<T: Real>(theta: T, mut probe: impl FnMut(T)) -> Result<T, TrigError> {
    if !(theta >= T::zero() && theta < T::FRAC_PI_2()) {
        return Err(TrigError::DomainError(format!("{theta} is not in [0, π/2)")));
    }
    if theta <= T::FRAC_PI_4() {
        probe(theta);
        Ok(theta.tan())
    } else {
        // FRAC_PI_2 - theta is exact here; the low part restores the
        // rounding error of FRAC_PI_2 itself.
        let complement = (T::FRAC_PI_2() - theta) + T::FRAC_PI_2_LO;
        probe(complement);
        Ok(complement.tan().recip())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TangentRow<T> {
    pub arc: T,
    pub tangent: T,
    pub first_difference: Option<T>,
}

/// Tangents at `0, step, 2·step, …` up to `max`.
pub fn tangent_table<T: Real>(step: T, max: T) -> Result<Vec<TangentRow<T>>, TrigError> {
    if step.is_nan() || max.is_nan() || step <= T::zero() || max >= T::FRAC_PI_2() || max < T::zero() {
        return Err(TrigError::DomainError(format!("step {step}, max {max}")));
    }
    // A row is kept when it overshoots max by rounding only.
    let n = (max / step + T::lit(1e-9)).floor().to_usize().expect("finite row count");
    let mut rows: Vec<TangentRow<T>> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let arc = (T::from_usize(k).expect("row index") * step).min(max);
        let tangent = tan_reduced(arc)?;
        let first_difference = rows.last().map(|r| tangent - r.tangent);
        rows.push(TangentRow { arc, tangent, first_difference });
    }
    Ok(rows)
}
