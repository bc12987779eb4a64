//! Per-degree summaries of trial fields.

use serde::Serialize;

/// Mean, variance and quantiles of one field over the trials of one degree.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FieldStats {
    pub count: usize,
    pub mean: f64,
    /// Sample variance (denominator `count - 1`; zero for a single trial).
    pub variance: f64,
    pub min: f64,
    pub q25: f64,
    pub median: f64,
    pub q75: f64,
    pub max: f64,
}

/// Quantile by linear interpolation between order statistics.
fn quantile(sorted: &[f64], p: f64) -> f64 {
    let h = (sorted.len() - 1) as f64 * p;
    let lo = h.floor() as usize;
    let hi = h.ceil() as usize;
    sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
}

impl FieldStats {
    /// `None` for an empty sample.
    pub fn from_values(values: &[f64]) -> Option<Self> {
        if values.is_empty() {
            return None;
        }
        let n = values.len();
        let mean = values.iter().sum::<f64>() / n as f64;
        let variance = if n > 1 {
            values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1) as f64
        } else {
            0.0
        };
        let mut s = values.to_vec();
        s.sort_by(f64::total_cmp);
        Some(FieldStats {
            count: n,
            mean,
            variance,
            min: s[0],
            q25: quantile(&s, 0.25),
            median: quantile(&s, 0.5),
            q75: quantile(&s, 0.75),
            max: s[n - 1],
        })
    }

    /// Standard error of the mean.
    pub fn std_error(&self) -> f64 {
        (self.variance / self.count as f64).sqrt()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegreeSummary {
    pub n: usize,
    pub trials: usize,
    /// Field name and statistics, in record order.
    pub fields: Vec<(String, FieldStats)>,
}

impl DegreeSummary {
    pub fn field(&self, name: &str) -> Option<&FieldStats> {
        self.fields.iter().find(|(k, _)| k == name).map(|(_, s)| s)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SummaryStats {
    pub degrees: Vec<DegreeSummary>,
}

impl SummaryStats {
    pub fn get(&self, n: usize, field: &str) -> Option<&FieldStats> {
        self.degrees.iter().find(|d| d.n == n)?.field(field)
    }

    /// `(n, stats)` of `field` across degrees, in increasing `n`.
    pub fn series(&self, field: &str) -> Vec<(usize, &FieldStats)> {
        self.degrees
            .iter()
            .filter_map(|d| d.field(field).map(|s| (d.n, s)))
            .collect()
    }

    /// CSV with one row per (degree, field).
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "n", "field", "count", "mean", "variance", "min", "q25", "median", "q75", "max",
        ])
        .expect("in-memory write");
        for d in &self.degrees {
            for (name, s) in &d.fields {
                let row = [
                    d.n.to_string(),
                    name.clone(),
                    s.count.to_string(),
                    format!("{:?}", s.mean),
                    format!("{:?}", s.variance),
                    format!("{:?}", s.min),
                    format!("{:?}", s.q25),
                    format!("{:?}", s.median),
                    format!("{:?}", s.q75),
                    format!("{:?}", s.max),
                ];
                w.write_record(&row).expect("in-memory write");
            }
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ASCII output")
    }
}
