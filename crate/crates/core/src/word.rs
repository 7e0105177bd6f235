//! Words over the ordered alphabet `{1 < 2 < 3 < ...}`, their evaluations,
//! and the compositions and partitions that index tableau shapes.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::Result;

/// A finite word over the alphabet of positive integers.
///
/// Rank is not part of the type: operations that need a bound on the letters
/// take it as a parameter.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<u32>,
}

impl Word {
    /// Builds a word, rejecting the letter `0`.
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::InvalidLetter);
        }
        Ok(Word { letters })
    }

    /// The empty word.
    pub fn empty() -> Self {
        Word {
            letters: Vec::new(),
        }
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest letter, or 0 for the empty word.
    pub fn max_letter(&self) -> u32 {
        self.letters.iter().copied().max().unwrap_or(0)
    }

    /// Checks that every letter is at most `rank`.
    pub fn ensure_rank(&self, rank: u32) -> Result<()> {
        match self.letters.iter().find(|&&a| a > rank) {
            Some(&letter) => Err(Error::RankViolation { letter, rank }),
            None => Ok(()),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }
}

impl fmt::Display for Word {
    /// Digit string when all letters fit in one digit, comma-separated
    /// otherwise. A lone letter above 9 keeps a trailing comma so that the
    /// digit form and the comma form never collide (`"11,"` vs `"11"`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.max_letter() <= 9 {
            for a in &self.letters {
                write!(f, "{a}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.letters.iter().map(|a| a.to_string()).collect();
            write!(f, "{}", parts.join(","))?;
            if parts.len() == 1 {
                write!(f, ",")?;
            }
            Ok(())
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Ok(Word::empty());
        }
        let letters: Vec<u32> = if s.contains(',') {
            s.trim_end_matches(',')
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad letter `{p}`")))
                })
                .collect::<Result<_>>()?
        } else if s.chars().all(|c| c.is_ascii_digit() && c != '0') {
            s.chars().map(|c| c.to_digit(10).expect("digit")).collect()
        } else {
            // single letter above 9, e.g. "10"
            vec![s
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad word `{s}`")))?]
        };
        Word::new(letters)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// Letter-count vector of a word, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Evaluation(Vec<u32>);

impl Evaluation {
    pub fn counts(&self) -> &[u32] {
        &self.0
    }

    /// Total number of letters counted.
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Componentwise sum, padded to the longer vector.
    pub fn add(&self, other: &Evaluation) -> Evaluation {
        let len = self.0.len().max(other.0.len());
        let mut counts = vec![0; len];
        for (i, c) in counts.iter_mut().enumerate() {
            *c = self.0.get(i).copied().unwrap_or(0) + other.0.get(i).copied().unwrap_or(0);
        }
        Evaluation::from_counts(counts)
    }

    fn from_counts(mut counts: Vec<u32>) -> Evaluation {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Evaluation(counts)
    }
}

impl fmt::Display for Evaluation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Counts the occurrences of each letter of `w`.
pub fn evaluation(w: &Word) -> Evaluation {
    let mut counts = vec![0u32; w.max_letter() as usize];
    for &a in w.letters() {
        counts[a as usize - 1] += 1;
    }
    Evaluation::from_counts(counts)
}

/// Counts letter occurrences over any iterator of entries.
pub fn evaluation_of_entries<I: IntoIterator<Item = u32>>(entries: I) -> Evaluation {
    let mut counts: Vec<u32> = Vec::new();
    for a in entries {
        let idx = a as usize - 1;
        if counts.len() <= idx {
            counts.resize(idx + 1, 0);
        }
        counts[idx] += 1;
    }
    Evaluation::from_counts(counts)
}

/// True iff some letter `i+1` occurs strictly before some letter `i` in `w`.
pub fn contains_inversion(w: &Word, i: u32) -> bool {
    debug_assert!(i >= 1);
    let mut seen_upper = false;
    for &a in w.letters() {
        if a == i + 1 {
            seen_upper = true;
        } else if a == i && seen_upper {
            return true;
        }
    }
    false
}

/// A composition: a finite sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse("composition parts must be positive".into()));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All compositions of weight `m`, in lexicographic order.
    pub fn all_of_weight(m: u32) -> Vec<Composition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(remaining: u32, current: &mut Vec<u32>, out: &mut Vec<Composition>) {
            if remaining == 0 {
                out.push(Composition(current.clone()));
                return;
            }
            for part in 1..=remaining {
                current.push(part);
                rec(remaining - part, current, out);
                current.pop();
            }
        }
        rec(m, &mut current, &mut out);
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Accepts `2,4,3` or `(2,4,3)`; the empty string denotes the empty composition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Composition::new(Vec::new());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad part `{p}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

/// A partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(
                "partition parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.clone())
    }

    /// All partitions of weight `m`, in lexicographically decreasing order.
    pub fn all_of_weight(m: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition(current.clone()));
                return;
            }
            let mut part = remaining.min(max_part);
            while part >= 1 {
                current.push(part);
                rec(remaining - part, part, current, out);
                current.pop();
                part -= 1;
            }
        }
        rec(m, m, &mut current, &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let comp: Composition = s.parse()?;
        Partition::new(comp.parts().to_vec())
    }
}

/// Reorders the parts of `alpha` into weakly decreasing order.
pub fn sort_to_partition(alpha: &Composition) -> Partition {
    let mut parts = alpha.parts().to_vec();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition(parts)
}

/// The conjugate: entry `j` counts the parts of `beta` that are `>= j`.
///
/// Invariant under reordering of the parts; for a partition this is the
/// classical conjugate partition.
pub fn conjugate(beta: &Composition) -> Partition {
    let max = beta.parts().iter().copied().max().unwrap_or(0);
    let parts: Vec<u32> = (1..=max)
        .map(|j| beta.parts().iter().filter(|&&p| p >= j).count() as u32)
        .collect();
    Partition(parts)
}

/// All refinements of `alpha`: every composition obtained by splitting each
/// part into an ordered sum of positive parts. Lexicographic order.
pub fn refinements(alpha: &Composition) -> Vec<Composition> {
    let mut out = vec![Vec::new()];
    for &part in alpha.parts() {
        let splits = Composition::all_of_weight(part);
        let mut next = Vec::with_capacity(out.len() * splits.len());
        for prefix in &out {
            for split in &splits {
                let mut comp = prefix.clone();
                comp.extend_from_slice(split.parts());
                next.push(comp);
            }
        }
        out = next;
    }
    let mut result: Vec<Composition> = out.into_iter().map(Composition).collect();
    result.sort_unstable();
    result
}

/// The Schützenberger involution on `A_n`: reverse the word and replace each
/// letter `a` by `n - a + 1`.
pub fn schutzenberger(w: &Word, n: u32) -> Result<Word> {
    w.ensure_rank(n)?;
    let letters = w.letters().iter().rev().map(|&a| n - a + 1).collect();
    Ok(Word { letters })
}

/// All words of length exactly `len` over `A_n`, in lexicographic order.
pub fn words_of_length(len: usize, n: u32) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..len {
        out = out
            .iter()
            .flat_map(|w| {
                (1..=n).map(move |a| {
                    let mut letters = w.letters().to_vec();
                    letters.push(a);
                    Word { letters }
                })
            })
            .collect();
    }
    out
}

/// All words of length at most `len` over `A_n`, shortest first.
pub fn words_up_to_length(len: usize, n: u32) -> Vec<Word> {
    (0..=len).flat_map(|l| words_of_length(l, n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use proptest::prelude::*;

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn evaluation_counts_letters() {
        assert_eq!(evaluation(&word("2113")).counts(), &[2, 1, 1]);
        assert_eq!(evaluation(&Word::empty()).counts(), &[] as &[u32]);
        assert_eq!(evaluation(&word("12311")).counts(), &[3, 1, 1]);
    }

    #[test]
    fn evaluation_weight_is_length() {
        for w in words_up_to_length(8, 4) {
            assert_eq!(evaluation(&w).weight() as usize, w.len());
        }
    }

    #[test]
    fn inversion_detection() {
        assert!(contains_inversion(&word("12211"), 1));
        assert!(!contains_inversion(&word("12311"), 2));
        assert!(!contains_inversion(&Word::empty(), 1));
    }

    #[test]
    fn inversion_matches_pair_scan() {
        // oracle: scan all position pairs
        for w in words_up_to_length(5, 4) {
            for i in 1..=3u32 {
                let mut expected = false;
                for p in 0..w.len() {
                    for q in p + 1..w.len() {
                        if w.letters()[p] == i + 1 && w.letters()[q] == i {
                            expected = true;
                        }
                    }
                }
                assert_eq!(contains_inversion(&w, i), expected, "{w} i={i}");
            }
        }
    }

    #[test]
    fn sorting_compositions() {
        assert_eq!(
            sort_to_partition(&comp(&[2, 3, 1, 4, 1])).parts(),
            &[4, 3, 2, 1, 1]
        );
        assert_eq!(sort_to_partition(&comp(&[3, 2, 2])).parts(), &[3, 2, 2]);
        assert_eq!(sort_to_partition(&comp(&[1, 4])).parts(), &[4, 1]);
    }

    #[test]
    fn conjugate_counts_columns() {
        assert_eq!(conjugate(&comp(&[3, 2, 2])).parts(), &[3, 3, 1]);
        assert_eq!(conjugate(&comp(&[5])).parts(), &[1, 1, 1, 1, 1]);
        let alpha = comp(&[2, 3, 1, 4, 1]);
        assert_eq!(
            conjugate(&alpha),
            conjugate(&sort_to_partition(&alpha).as_composition())
        );
    }

    #[test]
    fn conjugate_invariant_under_reordering() {
        for m in 1..=7u32 {
            for alpha in Composition::all_of_weight(m) {
                let reference = conjugate(&alpha);
                let k = alpha.len();
                for perm in (0..k).permutations(k) {
                    let reordered =
                        comp(&perm.iter().map(|&i| alpha.parts()[i]).collect::<Vec<_>>());
                    assert_eq!(conjugate(&reordered), reference);
                }
            }
        }
    }

    #[test]
    fn refinement_examples() {
        let refs = refinements(&comp(&[2]));
        assert_eq!(refs, vec![comp(&[1, 1]), comp(&[2])]);
        assert_eq!(refinements(&comp(&[1, 1])), vec![comp(&[1, 1])]);
        assert_eq!(refinements(&comp(&[2, 3])).len(), 8);
    }

    #[test]
    fn refinement_count_formula() {
        for m in 1..=7u32 {
            for alpha in Composition::all_of_weight(m) {
                let expected: u64 = alpha.parts().iter().map(|&p| 1u64 << (p - 1)).product();
                let refs = refinements(&alpha);
                assert_eq!(refs.len() as u64, expected, "{alpha}");
                assert!(refs.iter().all(|b| b.weight() == alpha.weight()));
                assert!(
                    refs.windows(2).all(|w| w[0] < w[1]),
                    "sorted, duplicate-free"
                );
            }
        }
    }

    #[test]
    fn schutzenberger_examples() {
        assert_eq!(schutzenberger(&word("211"), 3).unwrap(), word("332"));
        for n in 1..=6 {
            for a in 1..=n {
                let w = Word::new(vec![a]).unwrap();
                assert_eq!(
                    schutzenberger(&w, n).unwrap(),
                    Word::new(vec![n - a + 1]).unwrap()
                );
            }
        }
        let w = word("12311");
        assert_eq!(
            schutzenberger(&schutzenberger(&w, 4).unwrap(), 4).unwrap(),
            w
        );
        assert!(matches!(
            schutzenberger(&word("15"), 4),
            Err(Error::RankViolation { letter: 5, rank: 4 })
        ));
    }

    #[test]
    fn schutzenberger_involution_exhaustive() {
        for w in words_up_to_length(6, 4) {
            assert_eq!(
                schutzenberger(&schutzenberger(&w, 4).unwrap(), 4).unwrap(),
                w
            );
        }
    }

    #[test]
    fn word_serialization_forms() {
        assert_eq!(word("12311").to_string(), "12311");
        let big = Word::new(vec![10, 2, 11]).unwrap();
        assert_eq!(big.to_string(), "10,2,11");
        assert_eq!("10,2,11".parse::<Word>().unwrap(), big);
        assert_eq!("".parse::<Word>().unwrap(), Word::empty());
        assert!("0".parse::<Word>().is_err());
    }

    #[test]
    fn composition_parsing() {
        assert_eq!(
            "(2,4,3,3)".parse::<Composition>().unwrap(),
            comp(&[2, 4, 3, 3])
        );
        assert_eq!(
            "2,4,3,3".parse::<Composition>().unwrap(),
            comp(&[2, 4, 3, 3])
        );
        assert_eq!(comp(&[2, 4, 3, 3]).to_string(), "(2,4,3,3)");
        assert!("3,0".parse::<Composition>().is_err());
        assert!(Partition::new(vec![2, 3]).is_err());
    }

    proptest! {
        #[test]
        fn evaluation_additive_under_concatenation(
            u in proptest::collection::vec(1u32..=6, 0..10),
            v in proptest::collection::vec(1u32..=6, 0..10),
        ) {
            let u = Word::new(u).unwrap();
            let v = Word::new(v).unwrap();
            prop_assert_eq!(evaluation(&u.concat(&v)), evaluation(&u).add(&evaluation(&v)));
        }

        #[test]
        fn word_display_roundtrip(letters in proptest::collection::vec(1u32..=30, 0..8)) {
            let w = Word::new(letters).unwrap();
            prop_assert_eq!(w.to_string().parse::<Word>().unwrap(), w);
        }
    }
}
