use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::{mean, IndicatorName, IndicatorVector, StatsError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CorrelationMethod {
    #[default]
    Pearson,
    /// Pearson correlation of average ranks.
    Spearman,
}

const MIN_PAIRS: usize = 3;

fn joint(x: &IndicatorVector, y: &IndicatorVector) -> Result<(Vec<f64>, Vec<f64>), StatsError> {
    if x.ids() != y.ids() {
        return Err(StatsError::Misaligned);
    }
    Ok(x.values()
        .iter()
        .zip(y.values())
        .filter_map(|(a, b)| Some(((*a)?, (*b)?)))
        .unzip())
}

/// 1-based ranks; tied values share the mean of their positions.
fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; values.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len()
            && values[order[end]].total_cmp(&values[order[start]]) == Ordering::Equal
        {
            end += 1;
        }
        // positions start+1 ..= end
        let rank = (start + 1 + end) as f64 / 2.0;
        for &i in &order[start..end] {
            ranks[i] = rank;
        }
        start = end;
    }
    ranks
}

fn is_constant(values: &[f64]) -> bool {
    values.windows(2).all(|w| w[0] == w[1])
}

fn pearson(x: &[f64], y: &[f64]) -> Result<f64, StatsError> {
    if is_constant(x) || is_constant(y) {
        return Err(StatsError::ZeroVariance);
    }
    let (mx, my) = (mean(x), mean(y));
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (&a, &b) in x.iter().zip(y) {
        let (dx, dy) = (a - mx, b - my);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(StatsError::ZeroVariance);
    }
    Ok((sxy / libm::sqrt(sxx * syy)).clamp(-1.0, 1.0))
}

/// Correlation over the jointly defined entries of two aligned vectors.
pub fn correlation(
    x: &IndicatorVector,
    y: &IndicatorVector,
    method: CorrelationMethod,
) -> Result<f64, StatsError> {
    let (xs, ys) = joint(x, y)?;
    if xs.len() < MIN_PAIRS {
        return Err(StatsError::InsufficientData {
            needed: MIN_PAIRS,
            found: xs.len(),
        });
    }
    match method {
        CorrelationMethod::Pearson => pearson(&xs, &ys),
        CorrelationMethod::Spearman => pearson(&average_ranks(&xs), &average_ranks(&ys)),
    }
}

/// Symmetric correlation matrix with a unit diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationMatrix {
    pub names: Vec<IndicatorName>,
    /// `None` where the pair could not be correlated (only from [`CorrelationMatrix::pairwise`]).
    pub entries: Vec<Vec<Option<f64>>>,
    /// Jointly defined journal count per pair.
    pub pairs: Vec<Vec<usize>>,
    pub journals: usize,
}

impl CorrelationMatrix {
    /// Like [`correlation_matrix`] but records failing pairs as `None`.
    pub fn pairwise(
        vectors: &[IndicatorVector],
        method: CorrelationMethod,
    ) -> Result<Self, StatsError> {
        if vectors.len() < 2 {
            return Err(StatsError::TooFewIndicators);
        }
        if vectors.iter().any(|v| v.ids() != vectors[0].ids()) {
            return Err(StatsError::Misaligned);
        }
        let k = vectors.len();
        let mut entries = vec![vec![None; k]; k];
        let mut pairs = vec![vec![0; k]; k];
        for i in 0..k {
            pairs[i][i] = vectors[i].values().iter().filter(|v| v.is_some()).count();
            entries[i][i] = Some(1.0);
            for j in i + 1..k {
                let r = correlation(&vectors[i], &vectors[j], method).ok();
                let n = joint(&vectors[i], &vectors[j])?.0.len();
                entries[i][j] = r;
                entries[j][i] = r;
                pairs[i][j] = n;
                pairs[j][i] = n;
            }
        }
        Ok(CorrelationMatrix {
            names: vectors.iter().map(IndicatorVector::name).collect(),
            entries,
            pairs,
            journals: vectors[0].len(),
        })
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn get(&self, i: usize, j: usize) -> Option<f64> {
        self.entries[i][j]
    }
}

/// Every pairwise correlation; fails on the first pair that cannot be computed.
pub fn correlation_matrix(
    vectors: &[IndicatorVector],
    method: CorrelationMethod,
) -> Result<CorrelationMatrix, StatsError> {
    let mut matrix = CorrelationMatrix::pairwise(vectors, method)?;
    for i in 0..vectors.len() {
        for j in i + 1..vectors.len() {
            if matrix.entries[i][j].is_none() {
                correlation(&vectors[i], &vectors[j], method)?;
            }
        }
    }
    // a vector with fewer than three defined values has no off-diagonal entry to fail,
    // but its diagonal is still meaningless
    for (i, v) in vectors.iter().enumerate() {
        let defined: Vec<f64> = v.values().iter().flatten().copied().collect();
        if defined.len() < MIN_PAIRS {
            return Err(StatsError::InsufficientData {
                needed: MIN_PAIRS,
                found: defined.len(),
            });
        }
        if is_constant(&defined) {
            return Err(StatsError::ZeroVariance);
        }
        matrix.entries[i][i] = Some(1.0);
    }
    Ok(matrix)
}
