use serde::{Deserialize, Serialize};

use super::MarkovMove;
use crate::braid::{BraidWord, Direction, Relation};
use crate::diagram::FORMAT;
use crate::error::{Error, Result};

/// One step of a derivation: a Markov-type move or a defining relation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "lowercase")]
pub enum Step {
    Move {
        #[serde(flatten)]
        op: MarkovMove,
    },
    Relation {
        relation: Relation,
        pos: usize,
        direction: Direction,
    },
}

impl Step {
    pub fn apply(&self, w: &BraidWord) -> Result<BraidWord> {
        match self {
            Step::Move { op } => op.apply(w),
            Step::Relation {
                relation,
                pos,
                direction,
            } => {
                if !relation.is_well_formed() {
                    return Err(Error::NoMatch {
                        relation: relation.kind.name().to_string(),
                        pos: *pos,
                    });
                }
                w.apply_relation(relation, *pos, *direction)
            }
        }
    }

    /// The step that undoes this one, given the word it produced.
    pub fn inverse(&self) -> Step {
        match self {
            Step::Move { op } => Step::Move { op: op.inverse() },
            Step::Relation {
                relation,
                pos,
                direction,
            } => Step::Relation {
                relation: relation.clone(),
                pos: *pos,
                direction: direction.reverse(),
            },
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Step::Move { op } => op.name(),
            Step::Relation {
                relation,
                pos,
                direction,
            } => {
                let arrow = match direction {
                    Direction::Forward => "->",
                    Direction::Backward => "<-",
                };
                format!("{relation} {arrow} at {pos}")
            }
        }
    }
}

impl From<MarkovMove> for Step {
    fn from(op: MarkovMove) -> Self {
        Step::Move { op }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MovePath {
    pub format: String,
    pub start: BraidWord,
    pub steps: Vec<Step>,
    pub end: BraidWord,
}

impl MovePath {
    pub fn empty(start: BraidWord) -> Self {
        MovePath {
            format: FORMAT.to_string(),
            end: start.clone(),
            start,
            steps: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Apply `step` to the current end, extending the path.
    pub fn push(&mut self, step: Step) -> Result<&BraidWord> {
        let next = step.apply(&self.end).map_err(|e| Error::InvalidPath {
            step: self.steps.len(),
            reason: e.to_string(),
        })?;
        self.steps.push(step);
        self.end = next;
        Ok(&self.end)
    }

    /// Every intermediate word, starting with `start`.
    pub fn replay(&self) -> Result<Vec<BraidWord>> {
        let mut words = vec![self.start.clone()];
        for (k, step) in self.steps.iter().enumerate() {
            let cur = words.last().expect("nonempty");
            let next = step.apply(cur).map_err(|e| Error::InvalidPath {
                step: k,
                reason: e.to_string(),
            })?;
            words.push(next);
        }
        Ok(words)
    }

    /// Replay from `start` and check every step and the recorded end.
    pub fn validate(&self) -> Result<()> {
        let words = self.replay()?;
        let last = words.last().expect("nonempty");
        if *last != self.end {
            return Err(Error::InvalidPath {
                step: self.steps.len(),
                reason: format!("replay ends at {last}, path records {}", self.end),
            });
        }
        Ok(())
    }

    /// The same derivation run backwards.
    pub fn reversed(&self) -> Result<MovePath> {
        let words = self.replay()?;
        let mut out = MovePath::empty(self.end.clone());
        for (k, step) in self.steps.iter().enumerate().rev() {
            let inv = step.inverse();
            out.push(inv)?;
            if out.end != words[k] {
                return Err(Error::InvalidPath {
                    step: self.steps.len() - 1 - k,
                    reason: "inverse step does not restore the previous word".into(),
                });
            }
        }
        Ok(out)
    }

    /// Concatenate, requiring `self.end == other.start`.
    pub fn then(mut self, other: &MovePath) -> Result<MovePath> {
        if self.end != other.start {
            return Err(Error::InvalidPath {
                step: self.steps.len(),
                reason: "paths do not meet".into(),
            });
        }
        self.steps.extend(other.steps.iter().cloned());
        self.end = other.end.clone();
        Ok(self)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("path serializes")
    }

    pub fn from_json(s: &str) -> Result<MovePath> {
        let p: MovePath = serde_json::from_str(s)?;
        p.validate()?;
        Ok(p)
    }
}
