use alloc::vec::Vec;

use super::{bucket, mean, Grouping, IndicatorName, IndicatorVector, StatsError};

/// One-way decomposition of an indicator's pooled variance, all with divisor `N`.
#[derive(Debug, Clone, PartialEq)]
pub struct VarianceDecomposition {
    pub indicator: IndicatorName,
    /// Defined values used.
    pub journals: usize,
    pub groups: usize,
    pub excluded: usize,
    pub grand_mean: f64,
    /// `sum_g sum_{x in g} (x - m_g)^2 / N`
    pub within: f64,
    /// `sum_g n_g (m_g - m)^2 / N`
    pub between: f64,
    /// `sum_x (x - m)^2 / N`, computed directly.
    pub total: f64,
    /// `within - between`
    pub reduction: f64,
    /// `between / within`; `None` when `within` is zero.
    pub ratio: Option<f64>,
}

pub fn variance_decomposition(
    values: &IndicatorVector,
    grouping: &Grouping,
) -> Result<VarianceDecomposition, StatsError> {
    let groups = bucket(values, grouping)?;
    let excluded = groups.values().map(|(_, undefined)| undefined).sum();
    let nonempty: Vec<&Vec<f64>> = groups
        .values()
        .map(|(defined, _)| defined)
        .filter(|d| !d.is_empty())
        .collect();
    if nonempty.is_empty() {
        return Err(StatsError::AllUndefined);
    }
    if nonempty.len() < 2 {
        return Err(StatsError::SingleGroup);
    }
    let pooled: Vec<f64> = nonempty.iter().flat_map(|g| g.iter().copied()).collect();
    let n = pooled.len() as f64;
    let grand_mean = mean(&pooled);
    let mut within = 0.0;
    let mut between = 0.0;
    for group in &nonempty {
        let m = mean(group);
        within += group.iter().map(|x| (x - m) * (x - m)).sum::<f64>();
        between += group.len() as f64 * (m - grand_mean) * (m - grand_mean);
    }
    within /= n;
    between /= n;
    let total = pooled
        .iter()
        .map(|x| (x - grand_mean) * (x - grand_mean))
        .sum::<f64>()
        / n;
    Ok(VarianceDecomposition {
        indicator: values.name(),
        journals: pooled.len(),
        groups: nonempty.len(),
        excluded,
        grand_mean,
        within,
        between,
        total,
        reduction: within - between,
        ratio: (within > 0.0).then(|| between / within),
    })
}
