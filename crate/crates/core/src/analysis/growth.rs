use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::graph::{enumerate_elements, CoxeterGraph};
use crate::profile::ElementProfile;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthRow {
    pub length: usize,
    pub total: usize,
    pub fully_commutative: usize,
    pub freely_braided: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthTable {
    pub rows: Vec<GrowthRow>,
}

impl GrowthTable {
    pub fn total_fully_commutative(&self) -> usize {
        self.rows.iter().map(|r| r.fully_commutative).sum()
    }

    pub fn total_freely_braided(&self) -> usize {
        self.rows.iter().map(|r| r.freely_braided).sum()
    }
}

/// Per-length counts of all, fully commutative and freely braided elements.
pub fn growth_probe(
    g: &CoxeterGraph,
    max_len: usize,
    element_budget: usize,
    word_cap: usize,
) -> Result<GrowthTable> {
    let layers = enumerate_elements(g, max_len, element_budget)?;
    let mut rows = Vec::with_capacity(layers.len());
    for (length, layer) in layers.iter().enumerate() {
        let flags = layer
            .par_iter()
            .map(|e| {
                let p = ElementProfile::new(g, e, word_cap)?;
                Ok((p.class_count() == 1, p.is_freely_braided()))
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(GrowthRow {
            length,
            total: layer.len(),
            fully_commutative: flags.iter().filter(|f| f.0).count(),
            freely_braided: flags.iter().filter(|f| f.1).count(),
        });
    }
    Ok(GrowthTable { rows })
}
