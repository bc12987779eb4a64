use crate::error::{Error, Result};

/// Empirical concentration function: the largest fraction of `samples`
/// inside any window `[a, a + h]`, found exactly by sliding a window over
/// the sorted samples (an optimal window can always start at a sample).
pub fn estimate_concentration(samples: &[f64], h: f64) -> Result<f64> {
    if !(h > 0.0) {
        return Err(Error::InvalidParams {
            name: "h".into(),
            reason: format!("window length must be positive, got {h}"),
        });
    }
    if samples.is_empty() {
        return Err(Error::InvalidArgument("no samples".into()));
    }
    if samples.iter().any(|x| x.is_nan()) {
        return Err(Error::InvalidArgument("NaN sample".into()));
    }
    let mut s = samples.to_vec();
    s.sort_by(f64::total_cmp);
    let mut best = 0;
    let mut hi = 0;
    for lo in 0..s.len() {
        let top = s[lo] + h;
        while hi < s.len() && s[hi] <= top {
            hi += 1;
        }
        best = best.max(hi - lo);
    }
    Ok(best as f64 / s.len() as f64)
}
