//! Counts of rational plane curves.
//!
//! `N_d` is the number of irreducible, nodal, rational plane curves of degree
//! `d` passing through `3d - 1` general points. The counts satisfy the
//! Kontsevich recursion
//!
//! ```text
//! N_1 = 1
//! N_d = sum over i + j = d, i, j > 0 of
//!       N_i N_j ( i^2 j^2 C(3d-4, 3i-2) - i^3 j C(3d-4, 3i-1) )
//! ```
//!
//! which is well founded because every term only involves lower degrees.

use crate::arith::{binomial, Int};
use num_traits::One;

/// Memo table of the counts `N_1 .. N_max`, filled bottom-up.
///
/// A table is grown single-threaded and immutable afterwards, so completed
/// tables can be shared freely across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GwTable {
    // values[k] = N_{k+1}
    values: Vec<Int>,
}

impl GwTable {
    /// Table containing only the base case `N_1 = 1`.
    pub fn new() -> Self {
        GwTable {
            values: vec![Int::one()],
        }
    }

    /// Builds the table for degrees `1 ..= max_degree`.
    ///
    /// Cost is `O(max_degree^2)` big-integer multiplications.
    pub fn up_to(max_degree: u32) -> Self {
        assert!(max_degree >= 1, "degree 0 is undefined in the recursion");
        let mut table = GwTable::new();
        table.extend_to(max_degree);
        table
    }

    /// Extends the table so that all degrees `1 ..= max_degree` are present.
    pub fn extend_to(&mut self, max_degree: u32) {
        while self.max_degree() < max_degree {
            let next = self.next_count();
            self.values.push(next);
        }
    }

    /// Largest degree currently stored.
    pub fn max_degree(&self) -> u32 {
        self.values.len() as u32
    }

    /// The count `N_d`. Panics if `d` is outside `1 ..= max_degree()`.
    pub fn n(&self, d: u32) -> &Int {
        assert!(d >= 1, "degree 0 is undefined in the recursion");
        assert!(
            d <= self.max_degree(),
            "table only covers degrees up to {}, asked for {}",
            self.max_degree(),
            d
        );
        &self.values[(d - 1) as usize]
    }

    /// All stored counts in degree order, starting at `N_1`.
    pub fn counts(&self) -> &[Int] {
        &self.values
    }

    // The recursion for degree max_degree + 1 in terms of the stored entries.
    fn next_count(&self) -> Int {
        let d = self.max_degree() as u64 + 1;
        let mut total = Int::from(0);
        for i in 1..d {
            let j = d - i;
            let attach = Int::from(i * i * j * j) * binomial(3 * d - 4, 3 * i as i64 - 2);
            let slide = Int::from(i * i * i * j) * binomial(3 * d - 4, 3 * i as i64 - 1);
            total += self.n(i as u32) * self.n(j as u32) * (attach - slide);
        }
        total
    }
}

impl Default for GwTable {
    fn default() -> Self {
        GwTable::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::binomial;
    use num_traits::Zero;

    #[test]
    fn base_case() {
        assert_eq!(GwTable::new().n(1), &Int::one());
    }

    #[test]
    fn degree_two_falls_out_of_the_recursion() {
        // Single term (i, j) = (1, 1): C(2, 1) - C(2, 2) = 2 - 1.
        assert_eq!(GwTable::up_to(2).n(2), &Int::one());
    }

    #[test]
    fn small_counts() {
        let table = GwTable::up_to(5);
        let expected: Vec<Int> = [1, 1, 12, 620, 87304]
            .iter()
            .map(|&v| Int::from(v as i64))
            .collect();
        assert_eq!(table.counts(), &expected[..]);
    }

    #[test]
    fn published_table_through_degree_eight() {
        let table = GwTable::up_to(8);
        assert_eq!(table.n(3), &Int::from(12));
        assert_eq!(table.n(7), &Int::from(14_616_808_192i64));
        assert_eq!(table.n(8), &Int::from(13_525_751_027_392i64));
    }

    #[test]
    fn entries_are_positive() {
        let table = GwTable::up_to(20);
        for d in 1..=20 {
            assert!(table.n(d) > &Int::zero(), "N_{d} not positive");
        }
    }

    #[test]
    fn sum_is_invariant_under_reindexing() {
        // The (i, j) and (j, i) summands differ termwise, but the total must
        // not depend on iteration order.
        let table = GwTable::up_to(9);
        for d in 2u64..=9 {
            let forward = table.n(d as u32).clone();
            let mut reversed = Int::zero();
            for i in (1..d).rev() {
                let j = d - i;
                reversed += table.n(i as u32)
                    * table.n(j as u32)
                    * (Int::from(i * i * j * j) * binomial(3 * d - 4, 3 * i as i64 - 2)
                        - Int::from(i * i * i * j) * binomial(3 * d - 4, 3 * i as i64 - 1));
            }
            assert_eq!(forward, reversed, "degree {d}");
        }
    }

    #[test]
    fn recomputation_is_deterministic() {
        assert_eq!(GwTable::up_to(10), GwTable::up_to(10));
    }

    #[test]
    fn extend_matches_fresh_build() {
        let mut grown = GwTable::up_to(3);
        grown.extend_to(8);
        assert_eq!(grown, GwTable::up_to(8));
    }

    #[test]
    #[should_panic(expected = "degree 0")]
    fn degree_zero_rejected() {
        GwTable::up_to(5).n(0);
    }
}
