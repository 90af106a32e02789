use crate::error::{Error, Result};

/// Largest I-concurrence reachable by a Schmidt-rank-`r` pure state in k×k,
/// `√(k(r−1) / (r(k−1)))`, attained at `λ₁ = … = λ_r = 1/r`.
pub fn max_i_concurrence(r: usize, k: usize) -> Result<f64> {
    if k < 2 {
        return Err(Error::domain("k", k as f64, "local dimension must be at least 2"));
    }
    if r < 2 || r > k {
        return Err(Error::domain(
            "r",
            r as f64,
            format!("Schmidt rank must lie in 2..={k}"),
        ));
    }
    let (r, k) = (r as f64, k as f64);
    Ok((k * (r - 1.0) / (r * (k - 1.0))).sqrt())
}

/// `[max(2,k), max(3,k), …, max(k,k)]`: strictly increasing, ending at 1.
pub fn max_i_concurrence_ordering(k: usize) -> Result<Vec<f64>> {
    (2..=k)
        .map(|r| max_i_concurrence(r, k))
        .collect::<Result<Vec<_>>>()
        .and_then(|v| {
            if v.is_empty() {
                Err(Error::domain("k", k as f64, "local dimension must be at least 2"))
            } else {
                Ok(v)
            }
        })
}

/// Large-dimension limit `√((r−1)/r)` of [`max_i_concurrence`] at fixed rank.
pub fn max_i_concurrence_limit(r: usize) -> Result<f64> {
    if r < 2 {
        return Err(Error::domain("r", r as f64, "Schmidt rank must be at least 2"));
    }
    let r = r as f64;
    Ok(((r - 1.0) / r).sqrt())
}
