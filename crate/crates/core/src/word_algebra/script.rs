//! Scripts of positioned rule applications.
//!
//! Each derived move `D15`–`D24` expands to a script over the primitive
//! moves that realizes it: cancellation-pair insertions, one essential
//! exchange or braid step, then cancellations. Scripts replay
//! positionally and fail atomically on the first illegal step.

use std::fmt;

use serde::{Deserialize, Serialize};

#[cfg(test)]
use super::rules::RuleTag;
use super::rules::{apply_rule, Direction, Rule, RuleError};
use super::{Sign, Word};

/// One positioned application.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveStep {
    pub rule: Rule,
    pub position: usize,
    pub direction: Direction,
}

impl fmt::Display for MoveStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} @{}", self.rule, self.direction, self.position)
    }
}

/// An ordered sequence of positioned rule applications.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveScript {
    pub steps: Vec<MoveStep>,
}

/// A script failure, reported with the offending step index.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("script step {step} failed: {source}")]
pub struct ScriptError {
    pub step: usize,
    pub source: RuleError,
}

impl MoveScript {
    pub fn new(steps: Vec<MoveStep>) -> MoveScript {
        MoveScript { steps }
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    /// Same script with every position shifted right by `offset`.
    pub fn shifted(&self, offset: usize) -> MoveScript {
        MoveScript {
            steps: self
                .steps
                .iter()
                .map(|s| MoveStep {
                    position: s.position + offset,
                    ..*s
                })
                .collect(),
        }
    }

    /// The reverse replay: steps reversed with directions flipped.
    pub fn inverted(&self) -> MoveScript {
        MoveScript {
            steps: self
                .steps
                .iter()
                .rev()
                .map(|s| MoveStep {
                    direction: s.direction.flip(),
                    ..*s
                })
                .collect(),
        }
    }

    /// All intermediate words of a replay, starting with `start`.
    pub fn replay(&self, start: &Word) -> Result<Vec<Word>, ScriptError> {
        let mut words = vec![start.clone()];
        for (k, step) in self.steps.iter().enumerate() {
            let next = apply_rule(
                words.last().unwrap(),
                &step.rule,
                step.position,
                step.direction,
            )
            .map_err(|source| ScriptError { step: k, source })?;
            words.push(next);
        }
        Ok(words)
    }
}

/// Apply the steps in order; returns the final word or the first failure.
pub fn verify_move_script(start: &Word, script: &MoveScript) -> Result<Word, ScriptError> {
    Ok(script
        .replay(start)?
        .pop()
        .expect("replay returns at least the start"))
}

fn step(rule: Rule, position: usize, direction: Direction) -> MoveStep {
    MoveStep {
        rule,
        position,
        direction,
    }
}

/// Expand a derived move into a script of primitive moves whose replay
/// carries the move's left side to its right side.
pub fn expand_derived_rule(rule: &Rule) -> Result<MoveScript, RuleError> {
    use Direction::{Backward as B, Forward as F};
    rule.check_constraints(usize::MAX)?; // index sanity against a huge degree only
    let steps = match *rule {
        Rule::D15 {
            i,
            j,
            sign: Sign::Pos,
        } => vec![step(Rule::R5 { i, j }, 0, F)],
        Rule::D15 {
            i,
            j,
            sign: Sign::Neg,
        } => vec![
            // grow a cancelling braid triple on the right, rotate it, cancel
            step(
                Rule::R4 {
                    i: j,
                    sign: Sign::Pos,
                },
                3,
                B,
            ),
            step(Rule::R4 { i, sign: Sign::Pos }, 4, B),
            step(
                Rule::R4 {
                    i: j,
                    sign: Sign::Pos,
                },
                5,
                B,
            ),
            step(Rule::R5 { i, j }, 3, B),
            step(Rule::R4 { i, sign: Sign::Neg }, 2, F),
            step(
                Rule::R4 {
                    i: j,
                    sign: Sign::Neg,
                },
                1,
                F,
            ),
            step(Rule::R4 { i, sign: Sign::Neg }, 0, F),
        ],
        Rule::D16 { i, j, sign } => {
            let mut v = vec![step(
                Rule::R4 {
                    i: j,
                    sign: sign.flip(),
                },
                0,
                B,
            )];
            v.extend(
                expand_derived_rule(&Rule::D15 { i: j, j: i, sign })?
                    .shifted(1)
                    .steps,
            );
            v.push(step(Rule::R4 { i, sign }, 3, F));
            v
        }
        Rule::D17 { i, j, sign } => {
            let mut v = vec![step(
                Rule::R4 {
                    i: j,
                    sign: sign.flip(),
                },
                3,
                B,
            )];
            v.extend(
                expand_derived_rule(&Rule::D15 {
                    i: j,
                    j: i,
                    sign: sign.flip(),
                })?
                .shifted(1)
                .steps,
            );
            v.push(step(Rule::R4 { i, sign }, 0, F));
            v
        }
        Rule::D18 {
            i,
            j,
            sign: Sign::Pos,
            sign2: Sign::Pos,
        } => {
            vec![step(Rule::R9 { i, j }, 0, F)]
        }
        Rule::D18 {
            i,
            j,
            sign: Sign::Neg,
            sign2: Sign::Neg,
        } => vec![
            step(Rule::R4 { i, sign: Sign::Pos }, 2, B),
            step(
                Rule::R4 {
                    i: j,
                    sign: Sign::Pos,
                },
                3,
                B,
            ),
            step(Rule::R9 { i, j }, 2, F),
            step(
                Rule::R4 {
                    i: j,
                    sign: Sign::Neg,
                },
                1,
                F,
            ),
            step(Rule::R4 { i, sign: Sign::Neg }, 0, F),
        ],
        Rule::D18 { i, j, sign, sign2 } => {
            // mixed signs reduce to the equal-sign exchange
            debug_assert_eq!(sign2, sign.flip());
            let mut v = vec![step(Rule::R4 { i: j, sign: sign2 }, 0, B)];
            v.extend(
                expand_derived_rule(&Rule::D18 {
                    i: j,
                    j: i,
                    sign,
                    sign2: sign,
                })?
                .shifted(1)
                .steps,
            );
            v.push(step(Rule::R4 { i: j, sign }, 2, F));
            v
        }
        Rule::D19 {
            i,
            j,
            sign: Sign::Pos,
        } => vec![step(Rule::R10 { i, j }, 0, F)],
        Rule::D19 {
            i,
            j,
            sign: Sign::Neg,
        } => vec![
            step(Rule::R4 { i, sign: Sign::Pos }, 2, B),
            step(Rule::R10 { i, j }, 1, B),
            step(Rule::R4 { i, sign: Sign::Neg }, 0, F),
        ],
        Rule::D20 { i, sign: Sign::Pos } => vec![step(Rule::R13 { i }, 0, F)],
        Rule::D20 { i, sign: Sign::Neg } => vec![
            step(Rule::R4 { i, sign: Sign::Neg }, 0, B),
            step(Rule::R13 { i }, 1, B),
        ],
        Rule::D21 { i, sign: Sign::Pos } => vec![step(Rule::R14 { i }, 0, F)],
        Rule::D21 { i, sign: Sign::Neg } => vec![
            step(Rule::R4 { i, sign: Sign::Pos }, 1, B),
            step(Rule::R14 { i }, 0, B),
        ],
        Rule::D22 { i, j, sign, sign2 } => vec![
            step(Rule::R6 { i, j, sign }, 0, F),
            step(
                Rule::R7 {
                    i: j,
                    j: i,
                    sign: sign2,
                },
                0,
                B,
            ),
        ],
        Rule::D23 { i, power } => {
            let mut v = Vec::new();
            if power >= 0 {
                for t in 0..power as usize {
                    v.push(step(Rule::R13 { i }, t, F));
                }
            } else {
                for t in 0..power.unsigned_abs() as usize {
                    v.push(step(Rule::R4 { i, sign: Sign::Neg }, t, B));
                    v.push(step(Rule::R13 { i }, t + 1, B));
                }
            }
            v
        }
        Rule::D24 { i, power } => {
            let mut v = Vec::new();
            if power >= 0 {
                for _ in 0..power as usize {
                    v.push(step(Rule::R14 { i }, 0, F));
                }
            } else {
                for _ in 0..power.unsigned_abs() as usize {
                    v.push(step(Rule::R4 { i, sign: Sign::Pos }, 1, B));
                    v.push(step(Rule::R14 { i }, 0, B));
                }
            }
            v
        }
        _ => return Err(RuleError::NotDerived(rule.tag())),
    };
    Ok(MoveScript::new(steps))
}

/// The primitive tags a derived expansion may use.
#[cfg(test)]
pub(crate) fn base_tags() -> [RuleTag; 8] {
    [
        RuleTag::R4,
        RuleTag::R5,
        RuleTag::R6,
        RuleTag::R7,
        RuleTag::R9,
        RuleTag::R10,
        RuleTag::R13,
        RuleTag::R14,
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word_algebra::Word;

    fn w(text: &str, n: usize) -> Word {
        Word::parse(text, n).unwrap()
    }

    fn endpoints(rule: Rule, degree: usize) -> (Word, Word) {
        let lhs = Word::new(degree, rule.lhs()).unwrap();
        let rhs = Word::new(degree, rule.rhs()).unwrap();
        (lhs, rhs)
    }

    #[test]
    fn empty_script_is_identity() {
        let one = Word::identity(3);
        assert_eq!(
            verify_move_script(&one, &MoveScript::default()).unwrap(),
            one
        );
    }

    #[test]
    fn negative_braid_triple_matches_the_derivation() {
        // the full replay of D15 at eps = -1, step for step
        let rule = Rule::D15 {
            i: 1,
            j: 2,
            sign: Sign::Neg,
        };
        let script = expand_derived_rule(&rule).unwrap();
        let words = script.replay(&w("G1 G2 G1", 3)).unwrap();
        let expected = [
            "G1 G2 G1",
            "G1 G2 G1 g2 G2",
            "G1 G2 G1 g2 g1 G1 G2",
            "G1 G2 G1 g2 g1 g2 G2 G1 G2",
            "G1 G2 G1 g1 g2 g1 G2 G1 G2",
            "G1 G2 g2 g1 G2 G1 G2",
            "G1 g1 G2 G1 G2",
            "G2 G1 G2",
        ];
        let got: Vec<String> = words.iter().map(|x| x.to_string()).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn curl_inversion_matches_the_derivation() {
        let rule = Rule::D20 {
            i: 1,
            sign: Sign::Neg,
        };
        let script = expand_derived_rule(&rule).unwrap();
        let words = script.replay(&w("e1", 2)).unwrap();
        let got: Vec<String> = words.iter().map(|x| x.to_string()).collect();
        assert_eq!(got, ["e1", "G1 g1 e1", "G1 e1"]);
    }

    #[test]
    fn all_derived_rules_verify_on_small_degrees() {
        for n in 2..=5usize {
            for i in 1..n {
                for j in 1..n {
                    for s in Sign::BOTH {
                        for d in Sign::BOTH {
                            let mut rules = Vec::new();
                            if i.abs_diff(j) == 1 {
                                rules.push(Rule::D15 { i, j, sign: s });
                                rules.push(Rule::D16 { i, j, sign: s });
                                rules.push(Rule::D17 { i, j, sign: s });
                                rules.push(Rule::D22 {
                                    i,
                                    j,
                                    sign: s,
                                    sign2: d,
                                });
                            }
                            if i.abs_diff(j) > 1 {
                                rules.push(Rule::D18 {
                                    i,
                                    j,
                                    sign: s,
                                    sign2: d,
                                });
                                rules.push(Rule::D19 { i, j, sign: s });
                            }
                            rules.push(Rule::D20 { i, sign: s });
                            rules.push(Rule::D21 { i, sign: s });
                            for rule in rules {
                                let script = expand_derived_rule(&rule).unwrap();
                                let (lhs, rhs) = endpoints(rule, n);
                                assert_eq!(
                                    verify_move_script(&lhs, &script).unwrap(),
                                    rhs,
                                    "rule {rule}"
                                );
                                // reverse replay returns to the source
                                assert_eq!(
                                    verify_move_script(&rhs, &script.inverted()).unwrap(),
                                    lhs,
                                    "rule {rule} inverted"
                                );
                            }
                        }
                    }
                }
                for k in -5i64..=5 {
                    for rule in [Rule::D23 { i, power: k }, Rule::D24 { i, power: k }] {
                        let script = expand_derived_rule(&rule).unwrap();
                        if k == 0 {
                            assert!(script.is_empty());
                        }
                        let (lhs, rhs) = endpoints(rule, n);
                        assert_eq!(
                            verify_move_script(&lhs, &script).unwrap(),
                            rhs,
                            "rule {rule}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn expansions_stay_on_base_rules() {
        let base = base_tags();
        let rule = Rule::D16 {
            i: 2,
            j: 3,
            sign: Sign::Neg,
        };
        for s in expand_derived_rule(&rule).unwrap().steps {
            assert!(base.contains(&s.rule.tag()), "unexpected {}", s.rule);
        }
    }

    #[test]
    fn base_rules_do_not_expand() {
        assert!(matches!(
            expand_derived_rule(&Rule::R5 { i: 1, j: 2 }),
            Err(RuleError::NotDerived(RuleTag::R5))
        ));
    }

    #[test]
    fn script_failure_reports_step_index() {
        let script = MoveScript::new(vec![
            step(Rule::R13 { i: 1 }, 0, Direction::Forward),
            step(Rule::R12 { i: 1 }, 0, Direction::Forward), // won't match g1 e1
        ]);
        let err = verify_move_script(&w("e1", 2), &script).unwrap_err();
        assert_eq!(err.step, 1);
    }
}
