//! Ground-truth combinatorial objects and the exhaustive enumerators that
//! every formula in the crate is checked against.
//!
//! A two-toned tiling of length `n + r` covers a `1 × (n + r)` strip with
//! white tiles of arbitrary positive length (total length `n`) and `r`
//! indistinguishable red unit squares. Two tilings are equal exactly when
//! their tile sequences are equal, so red squares never carry labels.
//!
//! The enumerators here are deliberately naive: they walk the full search
//! space and test each candidate against its filter. They share no code with
//! [`crate::sequences`] or [`crate::stats`].

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

/// Default ceiling on the number of objects an oracle query may visit.
pub const DEFAULT_CEILING: u64 = 10_000_000;

/// A single tile. Red squares always have length one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tile {
    White(u32),
    Red,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TileKind {
    White,
    Red,
}

impl Tile {
    pub fn kind(self) -> TileKind {
        match self {
            Tile::White(_) => TileKind::White,
            Tile::Red => TileKind::Red,
        }
    }

    // Tiles are never empty.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(self) -> u32 {
        match self {
            Tile::White(len) => len,
            Tile::Red => 1,
        }
    }

    pub fn is_white(self) -> bool {
        matches!(self, Tile::White(_))
    }
}

impl fmt::Display for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tile::White(len) => write!(f, "W{len}"),
            Tile::Red => f.write_str("R"),
        }
    }
}

/// An ordered sequence of tiles.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoTonedTiling {
    tiles: Vec<Tile>,
}

impl TwoTonedTiling {
    /// Panics if a white tile has length zero.
    pub fn new(tiles: Vec<Tile>) -> Self {
        assert!(
            tiles.iter().all(|t| t.len() >= 1),
            "white tiles must have positive length"
        );
        Self { tiles }
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn white_total(&self) -> u32 {
        self.tiles
            .iter()
            .filter(|t| t.is_white())
            .map(|t| t.len())
            .sum()
    }

    pub fn red_count(&self) -> u32 {
        self.tiles.iter().filter(|t| !t.is_white()).count() as u32
    }

    pub fn grid_len(&self) -> u32 {
        self.white_total() + self.red_count()
    }

    pub fn is_palindrome(&self) -> bool {
        is_palindrome(&self.tiles)
    }
}

impl fmt::Display for TwoTonedTiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, tile) in self.tiles.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{tile}")?;
        }
        Ok(())
    }
}

/// An ordered list of positive parts. The empty composition is the unique
/// composition of zero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    /// Panics on a zero part.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p >= 1), "parts must be positive");
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn runs(&self) -> Vec<Run> {
        runs_of(&self.parts)
    }

    pub fn is_palindrome(&self) -> bool {
        is_palindrome(&self.parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// A maximal block of equal consecutive parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Run {
    pub value: u32,
    pub length: u32,
    pub start: usize,
}

/// Splits `parts` into maximal runs, left to right.
pub fn runs_of(parts: &[u32]) -> Vec<Run> {
    let mut runs: Vec<Run> = Vec::new();
    for (i, &p) in parts.iter().enumerate() {
        match runs.last_mut() {
            Some(run) if run.value == p => run.length += 1,
            _ => runs.push(Run {
                value: p,
                length: 1,
                start: i,
            }),
        }
    }
    runs
}

fn is_palindrome<T: PartialEq>(xs: &[T]) -> bool {
    xs.iter().eq(xs.iter().rev())
}

/// Restrictions applied to a tiling query.
///
/// `suffix_white_tiles = s > 0` changes the grid: the strip has length
/// `n + r + s`, the white total is `n + s`, and the final `s` tiles (counted
/// as tiles, not cells) must all be white.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TilingFilter {
    pub max_white_len: Option<u32>,
    pub forbidden_white_len: Option<u32>,
    pub suffix_white_tiles: u32,
    pub palindromic: bool,
}

impl TilingFilter {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn max_white(k: u32) -> Self {
        Self {
            max_white_len: Some(k),
            ..Self::default()
        }
    }

    pub fn forbid_white(k: u32) -> Self {
        Self {
            forbidden_white_len: Some(k),
            ..Self::default()
        }
    }

    pub fn suffix(s: u32) -> Self {
        Self {
            suffix_white_tiles: s,
            ..Self::default()
        }
    }

    pub fn palindromic() -> Self {
        Self {
            palindromic: true,
            ..Self::default()
        }
    }

    pub fn with_max_white(mut self, k: u32) -> Self {
        self.max_white_len = Some(k);
        self
    }

    pub fn with_suffix(mut self, s: u32) -> Self {
        self.suffix_white_tiles = s;
        self
    }

    fn allows_white(&self, len: u32) -> bool {
        self.max_white_len.map_or(true, |k| len <= k) && self.forbidden_white_len != Some(len)
    }

    /// Checks the whole-sequence conditions; per-tile length rules are
    /// enforced during the walk.
    fn accepts(&self, tiles: &[Tile]) -> bool {
        let s = self.suffix_white_tiles as usize;
        if s > 0 && (tiles.len() < s || !tiles[tiles.len() - s..].iter().all(|t| t.is_white())) {
            return false;
        }
        !self.palindromic || is_palindrome(tiles)
    }
}

/// Constraint on the parts of a composition.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum PartConstraint {
    #[default]
    Unrestricted,
    MaxPart(u32),
    ForbiddenPart(u32),
    AllowedParts(BTreeSet<u32>),
    NoMultipleOf(u32),
}

impl PartConstraint {
    pub fn allowed(parts: impl IntoIterator<Item = u32>) -> Self {
        PartConstraint::AllowedParts(parts.into_iter().collect())
    }

    fn admits(&self, part: u32) -> bool {
        match self {
            PartConstraint::Unrestricted => true,
            PartConstraint::MaxPart(k) => part <= *k,
            PartConstraint::ForbiddenPart(k) => part != *k,
            PartConstraint::AllowedParts(set) => set.contains(&part),
            PartConstraint::NoMultipleOf(k) => *k == 0 || part % k != 0,
        }
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("oracle scale exceeded: query would visit {projected} objects (ceiling {ceiling})")]
    ScaleExceeded { projected: u128, ceiling: u64 },
}

/// Brute-force enumerator with a resource guard.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    ceiling: u64,
}

impl Default for Oracle {
    fn default() -> Self {
        Self {
            ceiling: DEFAULT_CEILING,
        }
    }
}

impl Oracle {
    pub fn with_ceiling(ceiling: u64) -> Self {
        Self { ceiling }
    }

    pub fn ceiling(&self) -> u64 {
        self.ceiling
    }

    fn guard(&self, projected: u128) -> Result<(), OracleError> {
        if projected > u128::from(self.ceiling) {
            Err(OracleError::ScaleExceeded {
                projected,
                ceiling: self.ceiling,
            })
        } else {
            Ok(())
        }
    }

    /// Visits every tiling with `r` red squares and white total `n` (plus
    /// `s` for a suffix filter) that passes `filter`, in lexicographic order
    /// with white tiles (shortest first) before red.
    pub fn for_each_tiling<F: FnMut(&[Tile])>(
        &self,
        r: u32,
        n: u32,
        filter: &TilingFilter,
        mut visit: F,
    ) -> Result<(), OracleError> {
        let white = n + filter.suffix_white_tiles;
        self.guard(projected_tilings(r, white, filter))?;
        let mut stack = Vec::with_capacity((white + r) as usize);
        walk_tilings(white, r, filter, &mut stack, &mut visit);
        Ok(())
    }

    pub fn enumerate_tilings(
        &self,
        r: u32,
        n: u32,
        filter: &TilingFilter,
    ) -> Result<Vec<TwoTonedTiling>, OracleError> {
        let mut out = Vec::new();
        self.for_each_tiling(r, n, filter, |tiles| {
            out.push(TwoTonedTiling {
                tiles: tiles.to_vec(),
            })
        })?;
        Ok(out)
    }

    pub fn count_tilings(
        &self,
        r: u32,
        n: u32,
        filter: &TilingFilter,
    ) -> Result<BigInt, OracleError> {
        let mut count: u64 = 0;
        self.for_each_tiling(r, n, filter, |_| count += 1)?;
        Ok(BigInt::from(count))
    }

    /// Tilings whose tile sequence reads the same in both directions.
    pub fn enumerate_palindromic_tilings(
        &self,
        r: u32,
        n: u32,
    ) -> Result<Vec<TwoTonedTiling>, OracleError> {
        self.enumerate_tilings(r, n, &TilingFilter::palindromic())
    }

    /// Visits every composition of `n` whose parts satisfy `constraint`, in
    /// lexicographic order. `n = 0` yields the empty composition once.
    pub fn for_each_composition<F: FnMut(&[u32])>(
        &self,
        n: u32,
        constraint: &PartConstraint,
        mut visit: F,
    ) -> Result<(), OracleError> {
        self.guard(projected_compositions(n, constraint))?;
        let mut stack = Vec::with_capacity(n as usize);
        walk_compositions(n, constraint, &mut stack, &mut visit);
        Ok(())
    }

    pub fn enumerate_compositions(
        &self,
        n: u32,
        constraint: &PartConstraint,
    ) -> Result<Vec<Composition>, OracleError> {
        let mut out = Vec::new();
        self.for_each_composition(n, constraint, |parts| {
            out.push(Composition {
                parts: parts.to_vec(),
            })
        })?;
        Ok(out)
    }

    pub fn count_compositions(
        &self,
        n: u32,
        constraint: &PartConstraint,
    ) -> Result<BigInt, OracleError> {
        let mut count: u64 = 0;
        self.for_each_composition(n, constraint, |_| count += 1)?;
        Ok(BigInt::from(count))
    }
}

fn walk_tilings<F: FnMut(&[Tile])>(
    white: u32,
    reds: u32,
    filter: &TilingFilter,
    stack: &mut Vec<Tile>,
    visit: &mut F,
) {
    if white == 0 && reds == 0 {
        if filter.accepts(stack) {
            visit(stack);
        }
        return;
    }
    for len in 1..=white {
        if filter.allows_white(len) {
            stack.push(Tile::White(len));
            walk_tilings(white - len, reds, filter, stack, visit);
            stack.pop();
        }
    }
    if reds > 0 {
        stack.push(Tile::Red);
        walk_tilings(white, reds - 1, filter, stack, visit);
        stack.pop();
    }
}

fn walk_compositions<F: FnMut(&[u32])>(
    remaining: u32,
    constraint: &PartConstraint,
    stack: &mut Vec<u32>,
    visit: &mut F,
) {
    if remaining == 0 {
        visit(stack);
        return;
    }
    for part in 1..=remaining {
        if constraint.admits(part) {
            stack.push(part);
            walk_compositions(remaining - part, constraint, stack, visit);
            stack.pop();
        }
    }
}

/// Number of sequences of allowed white lengths summing to `white`, split by
/// how many white tiles they use. Saturating; only feeds the resource guard.
fn white_arrangements(white: u32, allowed: impl Fn(u32) -> bool) -> Vec<Vec<u128>> {
    let w = white as usize;
    // ways[t][j]: sequences of j tiles with total t
    let mut ways = vec![vec![0u128; w + 1]; w + 1];
    ways[0][0] = 1;
    for t in 1..=w {
        for len in 1..=t {
            if !allowed(len as u32) {
                continue;
            }
            for j in 1..=t {
                ways[t][j] = ways[t][j].saturating_add(ways[t - len][j - 1]);
            }
        }
    }
    ways
}

fn binomial_u128(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(u128::from(n - i)) / u128::from(i + 1);
    }
    acc
}

fn projected_tilings(r: u32, white: u32, filter: &TilingFilter) -> u128 {
    let ways = white_arrangements(white, |len| filter.allows_white(len));
    ways[white as usize]
        .iter()
        .enumerate()
        .map(|(j, &w)| w.saturating_mul(binomial_u128(u64::from(r) + j as u64, u64::from(r))))
        .fold(0u128, u128::saturating_add)
}

fn projected_compositions(n: u32, constraint: &PartConstraint) -> u128 {
    let ways = white_arrangements(n, |p| constraint.admits(p));
    ways[n as usize]
        .iter()
        .fold(0u128, |a, &b| a.saturating_add(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use Tile::{Red as R, White as W};

    fn oracle() -> Oracle {
        Oracle::default()
    }

    #[test]
    fn one_red_two_white() {
        let tilings = oracle()
            .enumerate_tilings(1, 2, &TilingFilter::none())
            .unwrap();
        let expected: Vec<TwoTonedTiling> = vec![
            vec![W(1), W(1), R],
            vec![W(1), R, W(1)],
            vec![W(2), R],
            vec![R, W(1), W(1)],
            vec![R, W(2)],
        ]
        .into_iter()
        .map(TwoTonedTiling::new)
        .collect();
        assert_eq!(tilings, expected);
    }

    #[test]
    fn all_red() {
        let tilings = oracle()
            .enumerate_tilings(3, 0, &TilingFilter::none())
            .unwrap();
        assert_eq!(tilings, vec![TwoTonedTiling::new(vec![R, R, R])]);
    }

    #[test]
    fn spot_counts() {
        let o = oracle();
        assert_eq!(
            o.count_tilings(5, 5, &TilingFilter::none()).unwrap(),
            1182.into()
        );
        assert_eq!(
            o.count_tilings(2, 3, &TilingFilter::suffix(2)).unwrap(),
            56.into()
        );
        assert_eq!(
            o.count_tilings(1, 3, &TilingFilter::max_white(2)).unwrap(),
            10.into()
        );
        assert_eq!(
            o.count_tilings(1, 1, &TilingFilter::max_white(1)).unwrap(),
            2.into()
        );
    }

    #[test]
    fn suffix_grid_shape() {
        for t in oracle()
            .enumerate_tilings(1, 2, &TilingFilter::suffix(2))
            .unwrap()
        {
            assert_eq!(t.grid_len(), 1 + 2 + 2);
            assert_eq!(t.red_count(), 1);
            let tiles = t.tiles();
            assert!(tiles[tiles.len() - 2..].iter().all(|t| t.is_white()));
        }
    }

    #[test]
    fn palindromic_counts() {
        let o = oracle();
        assert_eq!(o.enumerate_palindromic_tilings(2, 2).unwrap().len(), 3);
        assert_eq!(o.enumerate_palindromic_tilings(2, 6).unwrap().len(), 20);
        assert_eq!(o.enumerate_palindromic_tilings(1, 1).unwrap().len(), 0);
    }

    #[test]
    fn palindromes_of_six_without_centre() {
        // Red squares combined with the palindromes 33, 1221, 2112, 111111
        // give twelve tilings; none has a central tile.
        let no_centre: Vec<_> = oracle()
            .enumerate_palindromic_tilings(2, 6)
            .unwrap()
            .into_iter()
            .filter(|t| t.tiles().len() % 2 == 0)
            .collect();
        assert_eq!(no_centre.len(), 12);
        let shown: Vec<String> = no_centre.iter().map(|t| t.to_string()).collect();
        assert!(shown.contains(&"W3 R R W3".to_string()));
        assert!(shown.contains(&"W1 R W1 W1 W1 W1 R W1".to_string()));
    }

    #[test]
    fn allowed_parts() {
        let comps = oracle()
            .enumerate_compositions(5, &PartConstraint::allowed([1, 2, 5]))
            .unwrap();
        assert_eq!(comps.len(), 9);
    }

    #[test]
    fn no_multiple_of_two() {
        let comps = oracle()
            .enumerate_compositions(4, &PartConstraint::NoMultipleOf(2))
            .unwrap();
        let shown: Vec<String> = comps.iter().map(|c| c.to_string()).collect();
        assert_eq!(shown, ["(1,1,1,1)", "(1,3)", "(3,1)"]);
    }

    #[test]
    fn empty_composition() {
        let comps = oracle()
            .enumerate_compositions(0, &PartConstraint::Unrestricted)
            .unwrap();
        assert_eq!(comps, vec![Composition::new(vec![])]);
        assert_eq!(comps[0].total(), 0);
    }

    #[test]
    fn lexicographic_compositions() {
        let comps = oracle()
            .enumerate_compositions(4, &PartConstraint::Unrestricted)
            .unwrap();
        assert_eq!(comps.len(), 8);
        assert!(comps.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn runs_example() {
        let runs = runs_of(&[2, 2, 2, 4, 1, 1, 2]);
        let shape: Vec<(u32, u32)> = runs.iter().map(|r| (r.value, r.length)).collect();
        assert_eq!(shape, [(2, 3), (4, 1), (1, 2), (2, 1)]);
        assert_eq!(runs_of(&[5]).len(), 1);
        assert_eq!(
            runs_of(&[1, 2, 1])
                .iter()
                .map(|r| r.length)
                .collect::<Vec<_>>(),
            [1, 1, 1]
        );
        assert!(runs_of(&[]).is_empty());
    }

    #[test]
    fn guard_refuses_large_queries() {
        let small = Oracle::with_ceiling(100);
        let err = small
            .count_compositions(10, &PartConstraint::Unrestricted)
            .unwrap_err();
        assert_eq!(
            err,
            OracleError::ScaleExceeded {
                projected: 512,
                ceiling: 100
            }
        );
        assert!(small.count_tilings(1, 2, &TilingFilter::none()).is_ok());
        assert!(Oracle::default()
            .count_compositions(40, &PartConstraint::Unrestricted)
            .is_err());
    }

    #[test]
    fn guard_projection_is_exact_without_whole_sequence_filters() {
        for r in 0..5 {
            for n in 0..7 {
                let f = TilingFilter::none();
                let counted = oracle().count_tilings(r, n, &f).unwrap();
                assert_eq!(BigInt::from(projected_tilings(r, n, &f)), counted);
            }
        }
    }
}
