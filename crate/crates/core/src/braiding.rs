//! Turning a Morse-presented virtual link diagram into a virtual braid.
//!
//! Crossings touched by an upward strand are first rebuilt so that both of
//! their strands run down. Every remaining up-arc then passes only virtual
//! crossings and is removed by the basic braiding move: the arc is cut, its
//! upper end is pulled to the top and its lower end to the bottom along a new
//! rightmost column, crossing everything on the way virtually.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::braid::{BraidCategory, BraidWord, GenKind, Generator};
use crate::diagram::{left_top_over, CrossingSign, Event, MorsePresentation, Orient, Scan, Via};
use crate::error::{Error, Result};

/// A maximal upward-oriented arc, from the cap where it starts (bottom) to
/// the cup where it ends (top). Columns are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UpArc {
    pub cap_slice: usize,
    pub cap_pos: usize,
    pub cup_slice: usize,
    pub cup_pos: usize,
    /// First classical or flat crossing the arc runs through, if any.
    pub crossing: Option<usize>,
    #[serde(skip)]
    segments: Vec<usize>,
}

impl UpArc {
    pub fn is_free(&self) -> bool {
        self.crossing.is_none()
    }
}

fn arcs_from_scan(m: &MorsePresentation, scan: &Scan) -> Vec<UpArc> {
    let mut out = Vec::new();
    for (k, ev) in m.slices.iter().enumerate() {
        let Event::Cap { pos, orient } = *ev else { continue };
        let row = &scan.rows[k];
        let (cap_col, start) = if orient.left_down() {
            (pos + 1, row[pos])
        } else {
            (pos, row[pos - 1])
        };
        let mut segments = vec![start];
        let mut crossing = None;
        let mut s = start;
        let cup_slice = loop {
            let link = scan.next[s];
            match link.via {
                Via::Cup { slice } => break slice,
                Via::Crossing { slice, .. } => {
                    crossing.get_or_insert(slice);
                }
                _ => {}
            }
            s = link.to;
            segments.push(s);
        };
        let top = *segments.last().unwrap();
        let cup_pos = scan.rows[cup_slice + 1]
            .iter()
            .position(|&x| x == top)
            .expect("cup column present")
            + 1;
        out.push(UpArc {
            cap_slice: k,
            cap_pos: cap_col,
            cup_slice,
            cup_pos,
            crossing,
            segments,
        });
    }
    out
}

/// All maximal up-arcs, in order of the cap they start from.
pub fn find_up_arcs(m: &MorsePresentation) -> Result<Vec<UpArc>> {
    let scan = Scan::new(m)?;
    Ok(arcs_from_scan(m, &scan))
}

fn bubble(row: &mut Vec<usize>, token: usize, target: usize, out: &mut Vec<Event>) {
    let mut idx = row.iter().position(|&t| t == token).expect("token in row");
    while idx < target {
        out.push(Event::VCross { pos: idx + 1 });
        row.swap(idx, idx + 1);
        idx += 1;
    }
    while idx > target {
        out.push(Event::VCross { pos: idx });
        row.swap(idx - 1, idx);
        idx -= 1;
    }
}

/// The basic braiding move on a free up-arc.
pub fn eliminate_up_arc(m: &MorsePresentation, arc: &UpArc) -> Result<MorsePresentation> {
    let scan = Scan::new(m)?;
    let current = arcs_from_scan(m, &scan)
        .into_iter()
        .find(|a| a.cap_slice == arc.cap_slice && a.cup_slice == arc.cup_slice)
        .ok_or(Error::NotFreeArc)?;
    if !current.is_free() {
        return Err(Error::NotFreeArc);
    }
    let up = &current.segments;
    let (ku, kc) = (current.cup_slice, current.cap_slice);
    let without_up = |row: &[usize]| -> Vec<usize> {
        row.iter().copied().filter(|t| !up.contains(t)).collect()
    };

    let mut slices = Vec::with_capacity(m.slices.len() + 2 * scan.rows[0].len());
    for (k, ev) in m.slices.iter().enumerate() {
        let before = &scan.rows[k];
        if k < ku || k > kc {
            slices.push(*ev);
        } else if k == ku {
            // The new column enters at the far right and moves left to take
            // the place of the cup's downward column.
            let Event::Cup { pos, .. } = *ev else { unreachable!() };
            let w = before.len();
            slices.extend((pos..=w).rev().map(|p| Event::VCross { pos: p }));
        } else if k == kc {
            // The cap's downward column leaves to the far right.
            let Event::Cap { pos, orient } = *ev else { unreachable!() };
            let x = if orient.left_down() { before[pos - 1] } else { before[pos] };
            let mut row = without_up(before);
            let last = row.len() - 1;
            bubble(&mut row, x, last, &mut slices);
        } else {
            let p = ev.pos();
            let touches_up = match ev {
                Event::Cup { .. } => false,
                _ => up.contains(&before[p - 1]) || up.contains(&before[p]),
            };
            if touches_up {
                debug_assert!(matches!(ev, Event::VCross { .. }));
                continue;
            }
            let left = before[..p - 1].iter().filter(|t| !up.contains(t)).count();
            slices.push(ev.with_pos(left + 1));
        }
    }
    Ok(MorsePresentation::new(m.strands + 1, slices))
}

/// Rebuild one crossing that has an upward strand so both strands run down.
///
/// Upward strands get a new cup to the right of the diagram feeding the
/// rebuilt crossing from above, and their exits are capped back onto the
/// original upward columns. Sign and over strand are preserved.
pub fn braid_crossing_box(m: &MorsePresentation, slice: usize) -> Result<MorsePresentation> {
    let scan = Scan::new(m)?;
    let ev = *m.slices.get(slice).ok_or_else(|| Error::MalformedDiagram {
        slice,
        reason: "no such slice".into(),
    })?;
    let (p, sign) = match ev {
        Event::Cross { pos, sign } => (pos, Some(sign)),
        Event::VCross { pos } => (pos, None),
        _ => return Err(Error::NoUpArc(slice)),
    };
    let before = &scan.rows[slice];
    let after = &scan.rows[slice + 1];
    let (l, r) = (before[p - 1], before[p]);
    let (dl, dr) = (scan.down[l], scan.down[r]);
    if dl && dr {
        return Err(Error::NoUpArc(slice));
    }

    let mut next_token = scan.segments();
    let mut fresh = || {
        next_token += 1;
        next_token - 1
    };
    let mut out: Vec<Event> = m.slices[..slice].to_vec();
    let mut row = before.clone();

    // strand a runs top-left to bottom-right, strand b top-right to bottom-left
    let mut entry = [l, r];
    let mut feed = [None, None];
    for (s, down) in [dl, dr].into_iter().enumerate() {
        if !down {
            let (u, d) = (fresh(), fresh());
            out.push(Event::Cup {
                pos: row.len() + 1,
                orient: Orient::UpDown,
            });
            row.push(u);
            row.push(d);
            entry[s] = d;
            feed[s] = Some(u);
        }
    }
    let a_left = match sign {
        Some(CrossingSign::Pos) => left_top_over(true, dl, dr),
        Some(CrossingSign::Neg) => !left_top_over(false, dl, dr),
        _ => true,
    };
    let (first, second) = if a_left { (0, 1) } else { (1, 0) };
    let end = row.len() - 1;
    bubble(&mut row, entry[first], end, &mut out);
    bubble(&mut row, entry[second], end, &mut out);
    let at = row.len() - 1;
    out.push(match sign {
        Some(sign) => Event::Cross { pos: at, sign },
        None => Event::VCross { pos: at },
    });
    let mut exit = [0; 2];
    exit[first] = fresh();
    exit[second] = fresh();
    row[at - 1] = exit[second];
    row[at] = exit[first];

    for (s, top) in [l, r].into_iter().enumerate() {
        if feed[s].is_some() {
            let t = row.iter().position(|&x| x == top).unwrap();
            bubble(&mut row, exit[s], t + 1, &mut out);
            let t = row.iter().position(|&x| x == top).unwrap();
            out.push(Event::Cap {
                pos: t + 1,
                orient: Orient::UpDown,
            });
            row.drain(t..=t + 1);
        }
    }
    let bottom_b = feed[1].unwrap_or(exit[1]);
    let bottom_a = feed[0].unwrap_or(exit[0]);
    bubble(&mut row, bottom_b, p - 1, &mut out);
    bubble(&mut row, bottom_a, p, &mut out);
    debug_assert_eq!(row.len(), after.len());

    out.extend_from_slice(&m.slices[slice + 1..]);
    Ok(MorsePresentation::new(m.strands, out))
}

fn first_upward_crossing(m: &MorsePresentation, scan: &Scan) -> Option<usize> {
    m.slices.iter().enumerate().find_map(|(k, ev)| match ev {
        Event::Cross { pos, .. } => {
            let row = &scan.rows[k];
            (!scan.down[row[*pos - 1]] || !scan.down[row[*pos]]).then_some(k)
        }
        _ => None,
    })
}

/// Rebuild every classical or flat crossing that has an upward strand.
pub fn braid_all_crossings(m: &MorsePresentation) -> Result<MorsePresentation> {
    let mut m = m.clone();
    loop {
        let scan = Scan::new(&m)?;
        match first_upward_crossing(&m, &scan) {
            Some(k) => m = braid_crossing_box(&m, k)?,
            None => return Ok(m),
        }
    }
}

/// Read a presentation with no cups or caps as a braid word.
pub fn read_word(m: &MorsePresentation) -> Result<BraidWord> {
    if m.strands == 0 {
        return Err(Error::MalformedDiagram {
            slice: 0,
            reason: "empty diagram has no braid form".into(),
        });
    }
    let mut letters = Vec::with_capacity(m.slices.len());
    let mut flat = false;
    for (k, ev) in m.slices.iter().enumerate() {
        let g = match *ev {
            Event::Cross { pos, sign } => match sign {
                CrossingSign::Pos => Generator::s(pos),
                CrossingSign::Neg => Generator::s_inv(pos),
                CrossingSign::Flat => {
                    flat = true;
                    Generator::c(pos)
                }
            },
            Event::VCross { pos } => Generator::v(pos),
            _ => {
                return Err(Error::MalformedDiagram {
                    slice: k,
                    reason: "cup or cap left in braid form".into(),
                })
            }
        };
        letters.push(g);
    }
    let category = if flat {
        BraidCategory::Flat
    } else {
        BraidCategory::Virtual
    };
    if flat && letters.iter().any(|g| g.kind != GenKind::C && g.kind != GenKind::V) {
        return Err(Error::CategoryViolation {
            what: "diagram mixing flat and classical crossings".into(),
            category,
        });
    }
    BraidWord::new(m.strands, letters, category)
}

fn braid_with(
    m: &MorsePresentation,
    mut choose: impl FnMut(&[UpArc]) -> usize,
) -> Result<BraidWord> {
    let mut m = braid_all_crossings(m)?;
    loop {
        let arcs = find_up_arcs(&m)?;
        if arcs.is_empty() {
            break;
        }
        let pick = choose(&arcs);
        m = eliminate_up_arc(&m, &arcs[pick])?;
    }
    read_word(&m)
}

/// Braid a diagram, eliminating free up-arcs leftmost-topmost first.
pub fn braid(m: &MorsePresentation) -> Result<BraidWord> {
    braid_with(m, |arcs| {
        (0..arcs.len())
            .min_by_key(|&i| (arcs[i].cup_slice, arcs[i].cup_pos))
            .unwrap()
    })
}

/// Braid a diagram, eliminating up-arcs in a random order.
pub fn braid_random_order<R: Rng + ?Sized>(m: &MorsePresentation, rng: &mut R) -> Result<BraidWord> {
    braid_with(m, |arcs| rng.gen_range(0..arcs.len()))
}
