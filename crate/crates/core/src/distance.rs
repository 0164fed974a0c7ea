//! Categorical distribution distances between kind distributions.
//!
//! All logarithms are natural. KL uses the conventions 0·ln(0/q) = 0 and
//! KL = ∞ as soon as some p_i > 0 meets q_i = 0. The Jensen-Shannon
//! divergence is ½KL(p‖m) + ½KL(q‖m) with m = (p+q)/2, hence bounded by
//! ln 2. Wasserstein-1 treats the category axis as integer positions with
//! unit spacing: W = Σ_i |CDF_p(i) − CDF_q(i)|. That makes it ordering
//! dependent, which categorical data strictly speaking is not; the value is
//! reported for completeness and always computed over the canonical kind
//! order.

use serde::Serialize;

use crate::error::{Error, Result};

/// The six distances between two kind distributions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DistanceReport {
    pub kl_forward: f64,
    pub kl_backward: f64,
    pub js_divergence: f64,
    pub total_variation: f64,
    pub wasserstein: f64,
    pub hellinger: f64,
}

const NORMALIZATION_TOLERANCE: f64 = 1e-9;

fn validate(p: &[f64], q: &[f64]) -> Result<()> {
    if p.len() != q.len() {
        return Err(Error::DistributionLength(p.len(), q.len()));
    }
    for (name, v) in [("first", p), ("second", q)] {
        if let Some(x) = v.iter().find(|x| **x < 0.0 || !x.is_finite()) {
            return Err(Error::NotADistribution(format!(
                "{name} vector contains invalid entry {x}"
            )));
        }
        let sum: f64 = v.iter().sum();
        if (sum - 1.0).abs() > NORMALIZATION_TOLERANCE {
            return Err(Error::NotADistribution(format!(
                "{name} vector sums to {sum}, not 1"
            )));
        }
    }
    Ok(())
}

/// Kullback-Leibler divergence KL(p‖q) in nats.
fn kl(p: &[f64], q: &[f64]) -> f64 {
    let mut sum = 0.0;
    for (&pi, &qi) in p.iter().zip(q) {
        if pi == 0.0 {
            continue;
        }
        if qi == 0.0 {
            return f64::INFINITY;
        }
        sum += pi * (pi / qi).ln();
    }
    sum
}

/// Compute all six metrics between probability vectors over the same
/// category axis. Zero entries are permitted; vectors must sum to 1 within
/// 1e-9 and have equal lengths.
pub fn distribution_distances(p: &[f64], q: &[f64]) -> Result<DistanceReport> {
    validate(p, q)?;

    let m: Vec<f64> = p.iter().zip(q).map(|(&a, &b)| (a + b) / 2.0).collect();
    let js = 0.5 * kl(p, &m) + 0.5 * kl(q, &m);

    let total_variation = p
        .iter()
        .zip(q)
        .map(|(&a, &b)| (a - b).abs())
        .sum::<f64>()
        / 2.0;

    let hellinger_sq_sum: f64 = p
        .iter()
        .zip(q)
        .map(|(&a, &b)| {
            let d = a.sqrt() - b.sqrt();
            d * d
        })
        .sum();
    let hellinger = (hellinger_sq_sum / 2.0).sqrt();

    let mut cdf_gap = 0.0;
    let mut cp = 0.0;
    let mut cq = 0.0;
    for (&a, &b) in p.iter().zip(q) {
        cp += a;
        cq += b;
        cdf_gap += (cp - cq).abs();
    }

    Ok(DistanceReport {
        kl_forward: kl(p, q),
        kl_backward: kl(q, p),
        js_divergence: js,
        total_variation,
        wasserstein: cdf_gap,
        hellinger,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::LN_2;

    #[test]
    fn identical_distributions_have_zero_distance() {
        let p = [0.25, 0.25, 0.5];
        let r = distribution_distances(&p, &p).unwrap();
        assert_eq!(r.kl_forward, 0.0);
        assert_eq!(r.kl_backward, 0.0);
        assert_eq!(r.js_divergence, 0.0);
        assert_eq!(r.total_variation, 0.0);
        assert_eq!(r.wasserstein, 0.0);
        assert_eq!(r.hellinger, 0.0);
    }

    #[test]
    fn disjoint_supports_hit_the_closed_forms() {
        let p = [1.0, 0.0];
        let q = [0.0, 1.0];
        let r = distribution_distances(&p, &q).unwrap();
        assert_eq!(r.total_variation, 1.0);
        assert_eq!(r.js_divergence, LN_2);
        assert_eq!(r.hellinger, 1.0);
        assert!(r.kl_forward.is_infinite());
        assert!(r.kl_backward.is_infinite());
        assert_eq!(r.wasserstein, 1.0);
    }

    #[test]
    fn hand_computed_values() {
        let p = [0.5, 0.5];
        let q = [0.25, 0.75];
        let r = distribution_distances(&p, &q).unwrap();
        // KL(p||q) = 0.5 ln 2 - 0.5 ln 1.5 = 0.5 ln(4/3)
        let expected = 0.5 * (4.0f64 / 3.0).ln();
        assert!((r.kl_forward - expected).abs() < 1e-12);
        assert!((r.kl_forward - 0.143841).abs() < 1e-6);
        assert!((r.total_variation - 0.25).abs() < 1e-15);
    }

    #[test]
    fn rejects_unnormalized_vectors() {
        let err = distribution_distances(&[0.5, 0.6], &[0.5, 0.5]).unwrap_err();
        assert!(matches!(err, Error::NotADistribution(_)));
    }

    #[test]
    fn rejects_length_mismatch() {
        let err = distribution_distances(&[1.0], &[0.5, 0.5]).unwrap_err();
        assert!(matches!(err, Error::DistributionLength(1, 2)));
    }

    #[test]
    fn rejects_negative_entries() {
        let err = distribution_distances(&[1.2, -0.2], &[0.5, 0.5]).unwrap_err();
        assert!(matches!(err, Error::NotADistribution(_)));
    }

    #[test]
    fn js_is_bounded_by_ln_two() {
        let p = [0.9, 0.1, 0.0, 0.0];
        let q = [0.0, 0.0, 0.3, 0.7];
        let r = distribution_distances(&p, &q).unwrap();
        assert!(r.js_divergence <= LN_2 + 1e-15);
        assert!(r.js_divergence > 0.0);
    }
}
