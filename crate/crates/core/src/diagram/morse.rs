use serde::{Deserialize, Serialize};

use super::gauss::{CrossingSign, GaussCode, Role, TraceItem, FORMAT};
use crate::braid::{BraidWord, GenKind};
use crate::error::{Error, Result};

/// Orientation of the two columns touched by a cup or cap, left column first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orient {
    #[serde(rename = "down-up")]
    DownUp,
    #[serde(rename = "up-down")]
    UpDown,
}

impl Orient {
    pub fn left_down(self) -> bool {
        self == Orient::DownUp
    }
}

/// One slice of a Morse presentation. Positions are 1-based columns; a cup
/// creates columns `pos, pos+1`, a cap removes them, crossings swap them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "event", rename_all = "lowercase")]
pub enum Event {
    Cup { pos: usize, orient: Orient },
    Cap { pos: usize, orient: Orient },
    Cross { pos: usize, sign: CrossingSign },
    #[serde(rename = "vcross")]
    VCross { pos: usize },
}

impl Event {
    pub fn pos(&self) -> usize {
        match *self {
            Event::Cup { pos, .. }
            | Event::Cap { pos, .. }
            | Event::Cross { pos, .. }
            | Event::VCross { pos } => pos,
        }
    }

    pub(crate) fn with_pos(self, pos: usize) -> Event {
        match self {
            Event::Cup { orient, .. } => Event::Cup { pos, orient },
            Event::Cap { orient, .. } => Event::Cap { pos, orient },
            Event::Cross { sign, .. } => Event::Cross { pos, sign },
            Event::VCross { .. } => Event::VCross { pos },
        }
    }
}

/// A diagram read top to bottom. `strands` columns run downward from the top
/// boundary and are joined to the same bottom columns by closure arcs on the
/// right; a closed diagram drawn entirely with cups and caps has `strands == 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MorsePresentation {
    #[serde(default = "default_format")]
    pub format: String,
    #[serde(default)]
    pub strands: usize,
    pub slices: Vec<Event>,
}

fn default_format() -> String {
    FORMAT.to_string()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Via {
    Crossing { slice: usize, role: Role, sign: CrossingSign },
    Virtual { slice: usize },
    Cup { slice: usize },
    Cap { slice: usize },
    Closure,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Link {
    pub to: usize,
    pub via: Via,
}

/// The result of sweeping a presentation: column segments per row and how
/// the orientation flows from one segment to the next.
#[derive(Debug, Clone)]
pub(crate) struct Scan {
    /// `rows[k]` lists the segments crossing the level just above slice `k`;
    /// the last row is the bottom boundary.
    pub rows: Vec<Vec<usize>>,
    pub down: Vec<bool>,
    pub next: Vec<Link>,
}

/// Which strand of a crossing goes over: `true` for the strand entering at the
/// top-left column. Derived from the sign and the two column directions.
pub(crate) fn left_top_over(sign_positive: bool, left_down: bool, right_down: bool) -> bool {
    let a: (i32, i32) = if left_down { (1, 1) } else { (-1, -1) };
    let b: (i32, i32) = if right_down { (-1, 1) } else { (1, -1) };
    let cross = a.0 * b.1 - a.1 * b.0;
    (cross > 0) == sign_positive
}

impl Scan {
    pub fn new(m: &MorsePresentation) -> Result<Scan> {
        if m.format != FORMAT {
            return Err(Error::MalformedDiagram {
                slice: 0,
                reason: format!("unknown format {:?}", m.format),
            });
        }
        let mut down: Vec<bool> = Vec::new();
        let mut next: Vec<Option<Link>> = Vec::new();
        let fresh = |d: bool, down: &mut Vec<bool>, next: &mut Vec<Option<Link>>| {
            down.push(d);
            next.push(None);
            down.len() - 1
        };
        let mut row: Vec<usize> = (0..m.strands).map(|_| fresh(true, &mut down, &mut next)).collect();
        let mut rows = vec![row.clone()];
        for (k, ev) in m.slices.iter().enumerate() {
            let bad = |reason: String| Error::MalformedDiagram { slice: k, reason };
            let pos = ev.pos();
            match *ev {
                Event::Cup { orient, .. } => {
                    if pos == 0 || pos > row.len() + 1 {
                        return Err(bad(format!("cup position {pos} outside width {}", row.len())));
                    }
                    let l = fresh(orient.left_down(), &mut down, &mut next);
                    let r = fresh(!orient.left_down(), &mut down, &mut next);
                    let via = Via::Cup { slice: k };
                    if orient.left_down() {
                        next[r] = Some(Link { to: l, via });
                    } else {
                        next[l] = Some(Link { to: r, via });
                    }
                    row.insert(pos - 1, l);
                    row.insert(pos, r);
                }
                Event::Cap { orient, .. } => {
                    if pos == 0 || pos + 1 > row.len() {
                        return Err(bad(format!("cap position {pos} outside width {}", row.len())));
                    }
                    let (l, r) = (row[pos - 1], row[pos]);
                    if down[l] != orient.left_down() || down[r] == orient.left_down() {
                        return Err(bad("cap orientation disagrees with its columns".into()));
                    }
                    let via = Via::Cap { slice: k };
                    if down[l] {
                        next[l] = Some(Link { to: r, via });
                    } else {
                        next[r] = Some(Link { to: l, via });
                    }
                    row.drain(pos - 1..=pos);
                }
                Event::Cross { .. } | Event::VCross { .. } => {
                    if pos == 0 || pos + 1 > row.len() {
                        return Err(bad(format!("crossing position {pos} outside width {}", row.len())));
                    }
                    let (l, r) = (row[pos - 1], row[pos]);
                    let (dl, dr) = (down[l], down[r]);
                    let na = fresh(dl, &mut down, &mut next);
                    let nb = fresh(dr, &mut down, &mut next);
                    let (via_a, via_b) = match *ev {
                        Event::Cross { sign, .. } => {
                            let (ra, rb) = match sign {
                                CrossingSign::Flat => (Role::Flat, Role::Flat),
                                s => {
                                    if left_top_over(s == CrossingSign::Pos, dl, dr) {
                                        (Role::Over, Role::Under)
                                    } else {
                                        (Role::Under, Role::Over)
                                    }
                                }
                            };
                            (
                                Via::Crossing { slice: k, role: ra, sign },
                                Via::Crossing { slice: k, role: rb, sign },
                            )
                        }
                        _ => (Via::Virtual { slice: k }, Via::Virtual { slice: k }),
                    };
                    if dl {
                        next[l] = Some(Link { to: na, via: via_a });
                    } else {
                        next[na] = Some(Link { to: l, via: via_a });
                    }
                    if dr {
                        next[r] = Some(Link { to: nb, via: via_b });
                    } else {
                        next[nb] = Some(Link { to: r, via: via_b });
                    }
                    row[pos - 1] = nb;
                    row[pos] = na;
                }
            }
            rows.push(row.clone());
        }
        let end = m.slices.len();
        if row.len() != m.strands {
            return Err(Error::MalformedDiagram {
                slice: end,
                reason: format!("bottom width {} differs from strand count {}", row.len(), m.strands),
            });
        }
        for (q, &s) in row.iter().enumerate() {
            if !down[s] {
                return Err(Error::MalformedDiagram {
                    slice: end,
                    reason: format!("bottom column {} points up", q + 1),
                });
            }
            next[s] = Some(Link {
                to: rows[0][q],
                via: Via::Closure,
            });
        }
        let next = next
            .into_iter()
            .map(|l| l.expect("every segment has a successor"))
            .collect();
        Ok(Scan { rows, down, next })
    }

    pub fn segments(&self) -> usize {
        self.down.len()
    }

    /// Component index of every segment, numbered as in [`Scan::traces`].
    pub fn segment_components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.segments()];
        let mut count = 0;
        for start in 0..self.segments() {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut s = start;
            while comp[s] == usize::MAX {
                comp[s] = count;
                s = self.next[s].to;
            }
            count += 1;
        }
        comp
    }

    /// Walk every component once, starting from the earliest segment not yet seen.
    pub fn traces(&self) -> Vec<Vec<TraceItem>> {
        let mut seen = vec![false; self.segments()];
        let mut out = Vec::new();
        for start in 0..self.segments() {
            if seen[start] {
                continue;
            }
            let mut trace = Vec::new();
            let mut s = start;
            while !seen[s] {
                seen[s] = true;
                let link = self.next[s];
                match link.via {
                    Via::Crossing { slice, role, sign } => trace.push(TraceItem::Classical {
                        key: slice,
                        role,
                        sign,
                    }),
                    Via::Virtual { slice } => trace.push(TraceItem::Virtual { key: slice }),
                    _ => {}
                }
                s = link.to;
            }
            out.push(trace);
        }
        out
    }
}

impl MorsePresentation {
    pub fn new(strands: usize, slices: Vec<Event>) -> Self {
        MorsePresentation {
            format: FORMAT.to_string(),
            strands,
            slices,
        }
    }

    pub fn validate(&self) -> Result<()> {
        Scan::new(self).map(|_| ())
    }

    /// Column count just above each slice, plus the bottom width.
    pub fn widths(&self) -> Vec<usize> {
        let mut w = self.strands;
        let mut out = vec![w];
        for ev in &self.slices {
            match ev {
                Event::Cup { .. } => w += 2,
                Event::Cap { .. } => w = w.saturating_sub(2),
                _ => {}
            }
            out.push(w);
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("presentation serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("presentation serializes")
    }

    pub fn from_json(text: &str) -> Result<MorsePresentation> {
        let m: MorsePresentation = serde_json::from_str(text)?;
        m.validate()?;
        Ok(m)
    }

    pub fn count_classical(&self) -> usize {
        self.slices
            .iter()
            .filter(|e| matches!(e, Event::Cross { .. }))
            .count()
    }

    pub fn count_virtual(&self) -> usize {
        self.slices
            .iter()
            .filter(|e| matches!(e, Event::VCross { .. }))
            .count()
    }
}

impl MorsePresentation {
    /// Reverse the orientation of the listed components (numbered as in the
    /// Gauss code). Components running through the top boundary stay fixed,
    /// since boundary columns always point down.
    pub fn reverse_components(&self, which: &[usize]) -> Result<MorsePresentation> {
        let scan = Scan::new(self)?;
        let comp = scan.segment_components();
        for &t in &scan.rows[0] {
            if which.contains(&comp[t]) {
                return Err(Error::MalformedDiagram {
                    slice: 0,
                    reason: format!("component {} runs through the boundary", comp[t]),
                });
            }
        }
        let flip = |seg: usize| which.contains(&comp[seg]);
        let other = |o: Orient| match o {
            Orient::DownUp => Orient::UpDown,
            Orient::UpDown => Orient::DownUp,
        };
        let slices = self
            .slices
            .iter()
            .enumerate()
            .map(|(k, ev)| match *ev {
                Event::Cup { pos, orient } if flip(scan.rows[k + 1][pos - 1]) => Event::Cup {
                    pos,
                    orient: other(orient),
                },
                Event::Cap { pos, orient } if flip(scan.rows[k][pos - 1]) => Event::Cap {
                    pos,
                    orient: other(orient),
                },
                Event::Cross { pos, sign } if sign != CrossingSign::Flat => {
                    let row = &scan.rows[k];
                    if flip(row[pos - 1]) != flip(row[pos]) {
                        let sign = if sign == CrossingSign::Pos {
                            CrossingSign::Neg
                        } else {
                            CrossingSign::Pos
                        };
                        Event::Cross { pos, sign }
                    } else {
                        *ev
                    }
                }
                e => e,
            })
            .collect();
        Ok(MorsePresentation::new(self.strands, slices))
    }
}

pub fn gauss_from_morse(m: &MorsePresentation) -> Result<GaussCode> {
    let scan = Scan::new(m)?;
    Ok(GaussCode::from_traces(scan.traces()))
}

fn letter_event(kind: GenKind, pos: usize) -> Event {
    match kind {
        GenKind::SigmaPos => Event::Cross { pos, sign: CrossingSign::Pos },
        GenKind::SigmaNeg => Event::Cross { pos, sign: CrossingSign::Neg },
        GenKind::C => Event::Cross { pos, sign: CrossingSign::Flat },
        GenKind::V => Event::VCross { pos },
    }
}

/// The braid box with its closure arcs left implicit (`strands = n`).
pub fn render_closure(w: &BraidWord) -> MorsePresentation {
    MorsePresentation::new(
        w.strands(),
        w.letters().iter().map(|g| letter_event(g.kind, g.index)).collect(),
    )
}

/// The closed braid drawn with explicit cups and caps: return strands run up
/// on the right, nested around the braid box.
pub fn render_closure_closed(w: &BraidWord) -> MorsePresentation {
    let n = w.strands();
    let mut slices: Vec<Event> = (1..=n)
        .map(|j| Event::Cup { pos: j, orient: Orient::DownUp })
        .collect();
    slices.extend(w.letters().iter().map(|g| letter_event(g.kind, g.index)));
    slices.extend((1..=n).rev().map(|j| Event::Cap { pos: j, orient: Orient::DownUp }));
    MorsePresentation::new(0, slices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_word;
    use crate::diagram::closure;

    fn unknot() -> MorsePresentation {
        MorsePresentation::new(
            0,
            vec![
                Event::Cup { pos: 1, orient: Orient::DownUp },
                Event::Cap { pos: 1, orient: Orient::DownUp },
            ],
        )
    }

    #[test]
    fn unknot_and_two_circles() {
        let g = gauss_from_morse(&unknot()).unwrap();
        assert_eq!(g.components(), 1);
        assert_eq!(g.crossing_count(), 0);
        let two = MorsePresentation::new(
            0,
            vec![
                Event::Cup { pos: 1, orient: Orient::DownUp },
                Event::Cup { pos: 3, orient: Orient::UpDown },
                Event::Cap { pos: 3, orient: Orient::UpDown },
                Event::Cap { pos: 1, orient: Orient::DownUp },
            ],
        );
        assert_eq!(gauss_from_morse(&two).unwrap().components(), 2);
    }

    #[test]
    fn renderings_match_closure() {
        for text in ["n=3 s1 v2 S1 s2", "n=2", "n=4 v3 s1 S2 v1 s3", "n=2 c1 v1 cat=flat"] {
            let w = parse_word(text).unwrap();
            assert_eq!(gauss_from_morse(&render_closure(&w)).unwrap(), closure(&w));
            assert_eq!(gauss_from_morse(&render_closure_closed(&w)).unwrap(), closure(&w));
        }
    }

    #[test]
    fn malformed_reports_slice() {
        let m = MorsePresentation::new(
            0,
            vec![
                Event::Cup { pos: 1, orient: Orient::DownUp },
                Event::Cross { pos: 1, sign: CrossingSign::Pos },
                Event::Cap { pos: 1, orient: Orient::DownUp },
            ],
        );
        assert!(matches!(Scan::new(&m), Err(Error::MalformedDiagram { slice: 2, .. })));
        let m = MorsePresentation::new(1, vec![Event::VCross { pos: 1 }]);
        assert!(matches!(Scan::new(&m), Err(Error::MalformedDiagram { slice: 0, .. })));
        let m = MorsePresentation::new(0, vec![Event::Cup { pos: 1, orient: Orient::UpDown }]);
        assert!(matches!(Scan::new(&m), Err(Error::MalformedDiagram { slice: 1, .. })));
    }

    #[test]
    fn reversal_keeps_over_strands() {
        let w = parse_word("n=3 s1 S2 v1 s2").unwrap();
        let m = render_closure_closed(&w);
        let g = gauss_from_morse(&m).unwrap();
        for which in [vec![0], vec![1], vec![0, 1]] {
            if which.iter().any(|&c| c >= g.components()) {
                continue;
            }
            let r = m.reverse_components(&which).unwrap();
            let h = gauss_from_morse(&r).unwrap();
            assert_eq!(h.crossing_count(), g.crossing_count());
            let twice = gauss_from_morse(&r.reverse_components(&which).unwrap()).unwrap();
            assert_eq!(twice, g);
        }
        assert!(render_closure(&w).reverse_components(&[0]).is_err());
    }

    #[test]
    fn json_shape() {
        let json = r#"{"format":"vbraid-1","slices":[{"event":"cup","pos":1,"orient":"down-up"},{"event":"cap","pos":1,"orient":"down-up"}]}"#;
        let m = MorsePresentation::from_json(json).unwrap();
        assert_eq!(m, unknot());
        let back = MorsePresentation::from_json(&m.to_json()).unwrap();
        assert_eq!(back, m);
        let v = MorsePresentation::new(2, vec![Event::VCross { pos: 1 }]);
        assert!(v.to_json().contains(r#"{"event":"vcross","pos":1}"#));
    }
}
