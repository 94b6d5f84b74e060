use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, GenKind};
use crate::error::{Error, Result};

pub const FORMAT: &str = "vbraid-1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Over,
    Under,
    Flat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CrossingSign {
    #[serde(rename = "+")]
    Pos,
    #[serde(rename = "-")]
    Neg,
    #[serde(rename = "flat")]
    Flat,
}

impl CrossingSign {
    pub fn value(self) -> i64 {
        match self {
            CrossingSign::Pos => 1,
            CrossingSign::Neg => -1,
            CrossingSign::Flat => 0,
        }
    }
}

/// One pass of a component through a classical or flat crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Visit {
    pub id: usize,
    pub role: Role,
    pub sign: CrossingSign,
}

/// Where a virtual crossing sits: `slot` counts the classical visits on
/// `component` that precede it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Incidence {
    pub component: usize,
    pub slot: usize,
}

/// Gauss code of an oriented virtual link diagram. Components are 0-indexed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaussCode {
    #[serde(default = "default_format")]
    pub format: String,
    pub components: Vec<Vec<Visit>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub virtual_record: Option<Vec<[Incidence; 2]>>,
}

fn default_format() -> String {
    FORMAT.to_string()
}

/// An event seen while walking along a component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum TraceItem {
    Classical { key: usize, role: Role, sign: CrossingSign },
    Virtual { key: usize },
}

impl GaussCode {
    /// Build a code from raw component walks, relabelling crossing ids 1..k
    /// in order of first visit.
    pub(crate) fn from_traces(traces: Vec<Vec<TraceItem>>) -> GaussCode {
        let mut ids: HashMap<usize, usize> = HashMap::new();
        let mut vfirst: HashMap<usize, usize> = HashMap::new();
        let mut record: Vec<[Incidence; 2]> = Vec::new();
        let mut components = Vec::with_capacity(traces.len());
        for (c, trace) in traces.into_iter().enumerate() {
            let mut visits = Vec::new();
            for item in trace {
                match item {
                    TraceItem::Classical { key, role, sign } => {
                        let next = ids.len() + 1;
                        let id = *ids.entry(key).or_insert(next);
                        visits.push(Visit { id, role, sign });
                    }
                    TraceItem::Virtual { key } => {
                        let here = Incidence {
                            component: c,
                            slot: visits.len(),
                        };
                        match vfirst.get(&key) {
                            Some(&k) => record[k][1] = here,
                            None => {
                                vfirst.insert(key, record.len());
                                record.push([here, here]);
                            }
                        }
                    }
                }
            }
            components.push(visits);
        }
        GaussCode {
            format: FORMAT.to_string(),
            components,
            virtual_record: Some(record),
        }
    }

    pub fn components(&self) -> usize {
        self.components.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.components.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn virtual_count(&self) -> Option<usize> {
        self.virtual_record.as_ref().map(Vec::len)
    }

    pub fn has_flat(&self) -> bool {
        self.components
            .iter()
            .flatten()
            .any(|v| v.sign == CrossingSign::Flat)
    }

    pub fn writhe(&self) -> i64 {
        self.components
            .iter()
            .flatten()
            .map(|v| v.sign.value())
            .sum::<i64>()
            / 2
    }

    /// Check the structural invariants of a Gauss code.
    pub fn validate(&self) -> Result<()> {
        let bad = |reason: String| Error::MalformedDiagram { slice: 0, reason };
        if self.format != FORMAT {
            return Err(bad(format!("unknown format {:?}", self.format)));
        }
        let mut seen: BTreeMap<usize, Vec<Visit>> = BTreeMap::new();
        for v in self.components.iter().flatten() {
            seen.entry(v.id).or_default().push(*v);
        }
        for (id, vs) in &seen {
            let ok = match vs.as_slice() {
                [a, b] if a.sign == b.sign => match a.sign {
                    CrossingSign::Flat => a.role == Role::Flat && b.role == Role::Flat,
                    _ => {
                        let mut roles = [a.role, b.role];
                        roles.sort();
                        roles == [Role::Over, Role::Under]
                    }
                },
                _ => false,
            };
            if !ok {
                return Err(bad(format!("crossing {id} is not visited once over and once under")));
            }
        }
        if let Some(record) = &self.virtual_record {
            for inc in record.iter().flatten() {
                let len = self
                    .components
                    .get(inc.component)
                    .map(Vec::len)
                    .ok_or_else(|| bad(format!("virtual record names component {}", inc.component)))?;
                if inc.slot > len {
                    return Err(bad(format!("virtual record slot {} out of range", inc.slot)));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("gauss code serializes")
    }

    pub fn from_json(text: &str) -> Result<GaussCode> {
        let g: GaussCode = serde_json::from_str(text)?;
        g.validate()?;
        Ok(g)
    }
}

/// Gauss code of the closed braid, components ordered by their lowest top position.
pub fn closure(w: &BraidWord) -> GaussCode {
    let perm = w.permutation();
    let mut traces = Vec::new();
    for cycle in perm.cycles() {
        let mut trace = Vec::new();
        for &start in &cycle {
            let mut pos = start;
            for (k, g) in w.letters().iter().enumerate() {
                if pos != g.index && pos != g.index + 1 {
                    continue;
                }
                let left = pos == g.index;
                trace.push(match g.kind {
                    GenKind::V => TraceItem::Virtual { key: k },
                    GenKind::C => TraceItem::Classical {
                        key: k,
                        role: Role::Flat,
                        sign: CrossingSign::Flat,
                    },
                    GenKind::SigmaPos | GenKind::SigmaNeg => {
                        let pos_sign = g.kind == GenKind::SigmaPos;
                        TraceItem::Classical {
                            key: k,
                            role: if left == pos_sign { Role::Over } else { Role::Under },
                            sign: if pos_sign { CrossingSign::Pos } else { CrossingSign::Neg },
                        }
                    }
                });
                pos = if left { pos + 1 } else { pos - 1 };
            }
        }
        traces.push(trace);
    }
    GaussCode::from_traces(traces)
}

/// Number of virtual crossings between each pair of distinct components, mod 2.
pub fn virtual_parity_between_components(g: &GaussCode) -> Result<BTreeMap<(usize, usize), u8>> {
    let record = g.virtual_record.as_ref().ok_or(Error::MissingVirtualRecord)?;
    let mut out = BTreeMap::new();
    for a in 0..g.components() {
        for b in a + 1..g.components() {
            out.insert((a, b), 0u8);
        }
    }
    for [x, y] in record {
        if x.component != y.component {
            let key = (x.component.min(y.component), x.component.max(y.component));
            if let Some(p) = out.get_mut(&key) {
                *p ^= 1;
            }
        }
    }
    Ok(out)
}

/// Sorted multiset of pair parities: a comparison key that ignores component labels
/// only when paired with [`parity_equivalent`].
pub fn parity_matrix(g: &GaussCode) -> Result<Vec<Vec<u8>>> {
    let map = virtual_parity_between_components(g)?;
    let n = g.components();
    let mut m = vec![vec![0u8; n]; n];
    for ((a, b), p) in map {
        m[a][b] = p;
        m[b][a] = p;
    }
    Ok(m)
}

/// Whether two codes have the same parity data up to relabelling components.
pub fn parity_equivalent(a: &GaussCode, b: &GaussCode) -> Result<bool> {
    let ma = parity_matrix(a)?;
    let mb = parity_matrix(b)?;
    if ma.len() != mb.len() {
        return Ok(false);
    }
    let n = ma.len();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if (0..n).all(|i| (0..n).all(|j| ma[i][j] == mb[perm[i]][perm[j]])) {
            return Ok(true);
        }
        if !next_permutation(&mut perm) {
            return Ok(false);
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
