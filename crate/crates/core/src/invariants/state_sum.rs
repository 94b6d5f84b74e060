//! Kauffman bracket by direct state enumeration over a Gauss code.

use std::collections::HashMap;

use super::poly::LaurentPoly;
use crate::braid::BraidWord;
use crate::diagram::{closure, CrossingSign, GaussCode, Role};
use crate::error::{Error, Result};

/// `δ = −A² − A⁻²`.
pub fn loop_value() -> LaurentPoly {
    LaurentPoly::from_terms('A', [(2, -1), (-2, -1)])
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra] = rb;
        }
        ra != rb
    }
}

// Endpoint slots per crossing.
const IN_OVER: usize = 0;
const OUT_OVER: usize = 1;
const IN_UNDER: usize = 2;
const OUT_UNDER: usize = 3;

/// Unnormalized bracket `⟨K⟩ = Σ_states A^(a−b) δ^(loops−1)`.
///
/// At a positive crossing the A-smoothing is the oriented one, at a negative
/// crossing the unoriented one. Virtual crossings play no part. The empty
/// diagram is given the value 1.
pub fn bracket_state_sum(g: &GaussCode) -> Result<LaurentPoly> {
    if g.has_flat() {
        return Err(Error::FlatCrossingPresent);
    }
    // crossing id -> dense index, with its sign
    let mut index: HashMap<usize, usize> = HashMap::new();
    let mut signs: Vec<CrossingSign> = Vec::new();
    for v in g.components.iter().flatten() {
        index.entry(v.id).or_insert_with(|| {
            signs.push(v.sign);
            signs.len() - 1
        });
    }
    let k = signs.len();
    let free_loops = g.components.iter().filter(|c| c.is_empty()).count();
    if k == 0 && free_loops == 0 {
        return Ok(LaurentPoly::one());
    }
    let end = |v: &crate::diagram::Visit, incoming: bool| -> usize {
        let c = index[&v.id];
        let slot = match (v.role, incoming) {
            (Role::Over, true) => IN_OVER,
            (Role::Over, false) => OUT_OVER,
            (_, true) => IN_UNDER,
            (_, false) => OUT_UNDER,
        };
        4 * c + slot
    };
    let mut arcs: Vec<(usize, usize)> = Vec::with_capacity(2 * k);
    for comp in &g.components {
        for (j, v) in comp.iter().enumerate() {
            let w = &comp[(j + 1) % comp.len()];
            arcs.push((end(v, false), end(w, true)));
        }
    }
    if k > 40 {
        return Err(Error::InvalidModel(format!("{k} crossings is beyond state enumeration")));
    }

    // Histogram of (number of A-smoothings, loop count) over all states.
    let mut hist: HashMap<(usize, usize), i64> = HashMap::new();
    for state in 0u64..(1u64 << k) {
        let mut uf = UnionFind::new(4 * k);
        let mut loops = 4 * k;
        for &(a, b) in &arcs {
            if uf.union(a, b) {
                loops -= 1;
            }
        }
        let mut a_count = 0;
        for (c, sign) in signs.iter().enumerate() {
            let a_smoothing = state >> c & 1 == 0;
            a_count += a_smoothing as usize;
            let oriented = a_smoothing == (*sign == CrossingSign::Pos);
            let base = 4 * c;
            let pairs = if oriented {
                [(IN_OVER, OUT_UNDER), (IN_UNDER, OUT_OVER)]
            } else {
                [(IN_OVER, IN_UNDER), (OUT_OVER, OUT_UNDER)]
            };
            for (x, y) in pairs {
                if uf.union(base + x, base + y) {
                    loops -= 1;
                }
            }
        }
        *hist.entry((a_count, loops + free_loops)).or_insert(0) += 1;
    }

    let delta = loop_value();
    let max_loops = hist.keys().map(|&(_, l)| l).max().unwrap_or(1);
    let mut delta_pows = vec![LaurentPoly::one()];
    for _ in 1..max_loops {
        let next = delta_pows.last().unwrap() * &delta;
        delta_pows.push(next);
    }
    let mut keys: Vec<_> = hist.into_iter().collect();
    keys.sort();
    let mut total = LaurentPoly::zero();
    for ((a, loops), count) in keys {
        let b = k - a;
        let term = delta_pows[loops - 1].shift(a as i32 - b as i32).scale(count);
        total += term;
    }
    Ok(total)
}

/// `(−A³)^(−w) ⟨K⟩`, invariant under all virtual Reidemeister moves.
pub fn normalized_bracket(g: &GaussCode) -> Result<LaurentPoly> {
    let raw = bracket_state_sum(g)?;
    let factor = LaurentPoly::monomial(-1, 3)
        .pow(-g.writhe())
        .expect("monomial is a unit");
    Ok(&factor * &raw)
}

/// Normalized bracket of the closure of `w`.
pub fn closure_bracket(w: &BraidWord) -> Result<LaurentPoly> {
    normalized_bracket(&closure(w))
}
