use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::FamilyTruncation;
use crate::graph::{Distance, IncGraph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RadialRow {
    pub n: usize,
    /// Largest distance from the element to something above it; `None`
    /// when nothing is above.
    pub max_up: Option<Distance>,
    pub max_down: Option<Distance>,
}

/// For each truncation level, the farthest inc-graph distance from the named
/// element to elements above it and to elements below it.
pub fn radial_growth(
    series: impl Fn(usize) -> Result<FamilyTruncation>,
    element: &str,
    levels: &[usize],
) -> Result<Vec<RadialRow>> {
    levels
        .iter()
        .map(|&n| {
            let t = series(n)?;
            let x = *t
                .name_of
                .get(element)
                .ok_or_else(|| Error::UnknownElement(element.to_string()))?;
            let g = IncGraph::from_poset(&t.poset);
            let row = g.distances_from(x);
            Ok(RadialRow {
                n,
                max_up: t.poset.strict_up(x).iter().map(|y| row[y]).max(),
                max_down: t.poset.strict_down(x).iter().map(|y| row[y]).max(),
            })
        })
        .collect()
}
