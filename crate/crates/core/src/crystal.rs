//! Kashiwara operators via the bracketing rule, quasi-Kashiwara operators,
//! and strictness detection.

use crate::word::{contains_inversion, Word};

/// Result of the bracket cancellation: the surviving `+`/`-` symbols of
/// `rho_i`, recorded by their 0-based positions in the original word.
///
/// Survivors always read `+...+ -...-` in position order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketSignature {
    plus_positions: Vec<usize>,
    minus_positions: Vec<usize>,
}

impl BracketSignature {
    /// Number of surviving `+` symbols (the count for `f`).
    pub fn plus_count(&self) -> usize {
        self.plus_positions.len()
    }

    /// Number of surviving `-` symbols (the count for `e`).
    pub fn minus_count(&self) -> usize {
        self.minus_positions.len()
    }

    pub fn plus_positions(&self) -> &[usize] {
        &self.plus_positions
    }

    pub fn minus_positions(&self) -> &[usize] {
        &self.minus_positions
    }
}

/// Replaces letters `i` by `+` and `i+1` by `-`, then deletes `-+` factors
/// until none remain.
///
/// One left-to-right pass suffices: a `+` cancels the nearest uncancelled `-`
/// to its left (`-+` factors are the ones deleted, so `+-` pairs survive).
pub fn rho(w: &Word, i: u32) -> BracketSignature {
    debug_assert!(i >= 1);
    let mut stack: Vec<(usize, bool)> = Vec::new(); // (position, is_plus)
    for (pos, &a) in w.letters().iter().enumerate() {
        if a == i {
            // '+': cancels a '-' on top of the stack, otherwise survives so far
            if stack.last().is_some_and(|&(_, is_plus)| !is_plus) {
                stack.pop();
            } else {
                stack.push((pos, true));
            }
        } else if a == i + 1 {
            stack.push((pos, false));
        }
    }
    let plus_positions = stack
        .iter()
        .filter(|&&(_, p)| p)
        .map(|&(pos, _)| pos)
        .collect();
    let minus_positions = stack
        .iter()
        .filter(|&&(_, p)| !p)
        .map(|&(pos, _)| pos)
        .collect();
    BracketSignature {
        plus_positions,
        minus_positions,
    }
}

/// `f_i`: turns the letter under the rightmost surviving `+` from `i` into `i+1`.
pub fn kashiwara_f(w: &Word, i: u32) -> Option<Word> {
    let sig = rho(w, i);
    let &pos = sig.plus_positions.last()?;
    Some(replace_letter(w, pos, i + 1))
}

/// `e_i`: turns the letter under the leftmost surviving `-` from `i+1` into `i`.
pub fn kashiwara_e(w: &Word, i: u32) -> Option<Word> {
    let sig = rho(w, i);
    let &pos = sig.minus_positions.first()?;
    Some(replace_letter(w, pos, i))
}

/// Quasi-Kashiwara `f_i`: undefined in the presence of an `(i+1)i`
/// subsequence; otherwise replaces the rightmost `i` by `i+1`.
pub fn quasi_kashiwara_f(w: &Word, i: u32) -> Option<Word> {
    if contains_inversion(w, i) {
        return None;
    }
    let pos = w.letters().iter().rposition(|&a| a == i)?;
    Some(replace_letter(w, pos, i + 1))
}

/// Quasi-Kashiwara `e_i`: undefined in the presence of an `(i+1)i`
/// subsequence; otherwise replaces the leftmost `i+1` by `i`.
pub fn quasi_kashiwara_e(w: &Word, i: u32) -> Option<Word> {
    if contains_inversion(w, i) {
        return None;
    }
    let pos = w.letters().iter().position(|&a| a == i + 1)?;
    Some(replace_letter(w, pos, i))
}

/// True iff `f_i` acts on `w` but the quasi-Kashiwara `f_i` does not.
pub fn is_strict_action(w: &Word, i: u32) -> bool {
    quasi_kashiwara_f(w, i).is_none() && kashiwara_f(w, i).is_some()
}

fn replace_letter(w: &Word, pos: usize, letter: u32) -> Word {
    let mut letters = w.letters().to_vec();
    letters[pos] = letter;
    Word::new(letters).expect("positive letter")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::insertion::schensted_insert;
    use crate::tableau::minimal_parsing;
    use crate::word::{evaluation, schutzenberger, words_up_to_length};

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    /// Naive oracle: materialize the sign word and delete `-+` factors by
    /// repeated scanning until a fixed point.
    fn rho_naive(w: &Word, i: u32) -> (Vec<usize>, Vec<usize>) {
        let mut symbols: Vec<(usize, bool)> = w
            .letters()
            .iter()
            .enumerate()
            .filter_map(|(pos, &a)| {
                if a == i {
                    Some((pos, true))
                } else if a == i + 1 {
                    Some((pos, false))
                } else {
                    None
                }
            })
            .collect();
        loop {
            let mut cancelled = None;
            for k in 0..symbols.len().saturating_sub(1) {
                if !symbols[k].1 && symbols[k + 1].1 {
                    cancelled = Some(k);
                    break;
                }
            }
            match cancelled {
                Some(k) => {
                    symbols.remove(k);
                    symbols.remove(k);
                }
                None => break,
            }
        }
        (
            symbols.iter().filter(|s| s.1).map(|s| s.0).collect(),
            symbols.iter().filter(|s| !s.1).map(|s| s.0).collect(),
        )
    }

    #[test]
    fn rho_examples() {
        let sig = rho(&word("211"), 1);
        assert_eq!(sig.plus_positions(), &[2]);
        assert_eq!(sig.minus_count(), 0);

        let sig = rho(&word("12211"), 1);
        assert_eq!(sig.plus_positions(), &[0]);
        assert_eq!(sig.minus_count(), 0);
        assert_eq!(kashiwara_f(&word("12211"), 1), Some(word("22211")));

        let sig = rho(&word("3344"), 1);
        assert_eq!((sig.plus_count(), sig.minus_count()), (0, 0));
    }

    #[test]
    fn rho_matches_naive_cancellation() {
        for w in words_up_to_length(6, 4) {
            for i in 1..=3 {
                let sig = rho(&w, i);
                let (plus, minus) = rho_naive(&w, i);
                assert_eq!(sig.plus_positions(), &plus, "{w} i={i}");
                assert_eq!(sig.minus_positions(), &minus, "{w} i={i}");
                // survivors read +^a -^b in position order
                if let (Some(&last_plus), Some(&first_minus)) = (plus.last(), minus.first()) {
                    assert!(last_plus < first_minus);
                }
            }
        }
    }

    #[test]
    fn kashiwara_figure_edges() {
        assert_eq!(kashiwara_f(&word("211"), 1), Some(word("212")));
        assert_eq!(kashiwara_f(&word("211"), 2), Some(word("311")));
        assert_eq!(kashiwara_f(&word("312"), 1), Some(word("322")));
        assert_eq!(kashiwara_e(&word("212"), 1), Some(word("211")));
    }

    #[test]
    fn quasi_kashiwara_examples() {
        let u = word("12211");
        assert_eq!(quasi_kashiwara_f(&u, 2), Some(word("12311")));
        assert_eq!(quasi_kashiwara_f(&u, 1), None);
        assert_eq!(quasi_kashiwara_e(&u, 1), None);
        assert_eq!(quasi_kashiwara_e(&u, 2), None);
    }

    #[test]
    fn strictness_examples() {
        assert!(is_strict_action(&word("211"), 1));
        assert!(!is_strict_action(&word("211"), 2));
        assert!(!is_strict_action(&word("333"), 1));
    }

    #[test]
    fn quasi_action_implies_kashiwara_action() {
        for w in words_up_to_length(6, 4) {
            for i in 1..=3 {
                if let Some(v) = quasi_kashiwara_f(&w, i) {
                    assert_eq!(kashiwara_f(&w, i), Some(v), "{w} i={i}");
                }
                if let Some(v) = quasi_kashiwara_e(&w, i) {
                    assert_eq!(kashiwara_e(&w, i), Some(v), "{w} i={i}");
                }
            }
        }
    }

    #[test]
    fn operators_are_mutually_inverse() {
        for w in words_up_to_length(6, 4) {
            for i in 1..=3 {
                if let Some(v) = kashiwara_f(&w, i) {
                    assert_eq!(kashiwara_e(&v, i), Some(w.clone()));
                }
                if let Some(v) = kashiwara_e(&w, i) {
                    assert_eq!(kashiwara_f(&v, i), Some(w.clone()));
                }
                if let Some(v) = quasi_kashiwara_f(&w, i) {
                    assert_eq!(quasi_kashiwara_e(&v, i), Some(w.clone()));
                }
                if let Some(v) = quasi_kashiwara_e(&w, i) {
                    assert_eq!(quasi_kashiwara_f(&v, i), Some(w.clone()));
                }
            }
        }
    }

    #[test]
    fn f_shifts_evaluation() {
        for w in words_up_to_length(6, 4) {
            for i in 1..=3usize {
                if let Some(v) = kashiwara_f(&w, i as u32) {
                    let before = evaluation(&w);
                    let after = evaluation(&v);
                    let get = |ev: &crate::word::Evaluation, k: usize| {
                        ev.counts().get(k).copied().unwrap_or(0) as i64
                    };
                    assert_eq!(get(&after, i - 1), get(&before, i - 1) - 1);
                    assert_eq!(get(&after, i), get(&before, i) + 1);
                }
            }
        }
    }

    #[test]
    fn quasi_actions_preserve_parsing_strict_actions_change_it() {
        for w in words_up_to_length(5, 4) {
            let parsing = minimal_parsing(&schensted_insert(&w));
            for i in 1..=3 {
                if let Some(v) = quasi_kashiwara_f(&w, i) {
                    assert_eq!(minimal_parsing(&schensted_insert(&v)), parsing, "{w} i={i}");
                } else if let Some(v) = kashiwara_f(&w, i) {
                    assert_ne!(minimal_parsing(&schensted_insert(&v)), parsing, "{w} i={i}");
                }
            }
        }
    }

    #[test]
    fn schutzenberger_conjugates_quasi_operators() {
        // f_i(u) = v iff f_{n-i}(v nat) = u nat; equivalently the involution
        // swaps f_i with e_{n-i}.
        let n = 4;
        for u in words_up_to_length(5, n) {
            let un = schutzenberger(&u, n).unwrap();
            for i in 1..n {
                let lhs = quasi_kashiwara_f(&u, i).map(|v| schutzenberger(&v, n).unwrap());
                let rhs = quasi_kashiwara_e(&un, n - i);
                assert_eq!(lhs, rhs, "{u} i={i}");
                if let Some(v) = quasi_kashiwara_f(&u, i) {
                    let vn = schutzenberger(&v, n).unwrap();
                    assert_eq!(quasi_kashiwara_f(&vn, n - i), Some(un.clone()), "{u} i={i}");
                }
            }
        }
    }
}
