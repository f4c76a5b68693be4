//! Named example posets and golden multiplication tables.
//!
//! Each fixture documents its element numbering next to its cover list, so
//! that hand computations can be checked against the code. Golden tables are
//! stored row-major and 0-based.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poset::Poset;

/// Hummingbird element names: `0`, `1` are the unlabeled minimals, `2` is
/// the third minimal, `3` and `4` the two maximals with overlapping supports.
pub const HUMMINGBIRD_A: usize = 2;
pub const HUMMINGBIRD_X: usize = 3;
pub const HUMMINGBIRD_B: usize = 4;

/// Puppy: the two incomparable middle elements above the common minimal 2.
pub const PUPPY_A: usize = 3;
pub const PUPPY_B: usize = 4;

/// Tulip: the two middle elements whose product direction distinguishes the
/// two admissible operations.
pub const TULIP_A: usize = 1;
pub const TULIP_B: usize = 2;

/// 13-element foliated tree: distinguished elements used by its golden test.
pub const FOLIATED_A: usize = 0;
pub const FOLIATED_B: usize = 3;
pub const FOLIATED_X: usize = 9;
pub const FOLIATED_Y: usize = 10;
pub const FOLIATED_TOP: usize = 12;

/// Surjection from the 17-element poset `homo-p` onto the 6-element tree
/// `homo-t` used by the preimage construction's golden test.
pub const HOMO_MAP: [usize; 17] = [0, 0, 0, 1, 1, 1, 2, 2, 2, 2, 5, 3, 3, 4, 4, 4, 4];

/// Names accepted by [`named_poset`], in catalog order.
pub const POSET_NAMES: [&str; 13] = [
    "hummingbird",
    "crown",
    "puppy",
    "tulip",
    "fig-normal",
    "fig-multiple",
    "fig-non-normal",
    "square2",
    "a2-v",
    "a2-n",
    "foliated13",
    "homo-p",
    "homo-t",
];

/// Names accepted by [`named_table`], in catalog order. Each table is an
/// admissible operation for the poset named by [`table_poset_name`].
pub const TABLE_NAMES: [&str; 6] = [
    "table-normal",
    "table-multi-1",
    "table-multi-2",
    "table-multi-3",
    "table-a2-v",
    "table-a2-n",
];

fn covers_of(name: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let (n, covers): (usize, Vec<(usize, usize)>) = match name {
        // Three minimals 0,1,2; maximal 3 above {0,1}, maximal 4 above
        // {0,1,2}. Not associative.
        "hummingbird" => (5, vec![(0, 3), (1, 3), (0, 4), (1, 4), (2, 4)]),
        // Maximals 0,1,2 over minimals 3,4,5; each maximal above exactly two
        // minimals: 0 over {3,4}, 1 over {3,5}, 2 over {4,5}.
        "crown" => (6, vec![(3, 0), (4, 0), (3, 1), (5, 1), (4, 2), (5, 2)]),
        // Minimals 0,1,2; middles 3,4 above 2; maximals 5 over {0,1,3} and
        // 6 over {0,1,4}. Admits exactly one admissible right-regular op.
        "puppy" => (7, vec![(0, 5), (1, 5), (3, 5), (0, 6), (1, 6), (4, 6), (2, 3), (2, 4)]),
        // Bottom 0; petals 1..=4; tops 5 over {1,3,4}, 6 over {1,2},
        // 7 over {2,3,4}. Relative meet-semilattice but not normal.
        "tulip" => (
            8,
            vec![
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 5),
                (3, 5),
                (4, 5),
                (1, 6),
                (2, 6),
                (2, 7),
                (3, 7),
                (4, 7),
            ],
        ),
        // Minimals 0,1 under middles 2,3, both under top 4. Normal.
        "fig-normal" => (5, vec![(4, 2), (4, 3), (2, 0), (2, 1), (3, 0), (3, 1)]),
        // Top 4 over middles 2,3; 2 over 0 only, 3 over 1 only. Admits three
        // distinct admissible right-normal operations.
        "fig-multiple" => (5, vec![(4, 2), (4, 3), (2, 0), (3, 1)]),
        // Isolated 0; minimals 2,3 under 1; 4 under 3. Associative with a
        // single semilattice congruence but no right-normal operation.
        "fig-non-normal" => (5, vec![(2, 1), (3, 1), (4, 3)]),
        // The square of the 2-element chain: 0 < 1,2 < 3.
        "square2" => (4, vec![(0, 1), (0, 2), (1, 3), (2, 3)]),
        // Isolated 0; minimal 3 under maximals 1 and 2 (a V).
        "a2-v" => (4, vec![(3, 1), (3, 2)]),
        // N shape: minimal 2 under maximals 0,1; minimal 3 under 1 only.
        "a2-n" => (4, vec![(2, 0), (2, 1), (3, 1)]),
        // Foliated tree: minimals 0..=5, internal nodes 6..=11, top 12.
        "foliated13" => (
            13,
            vec![
                (0, 6),
                (6, 9),
                (1, 7),
                (2, 7),
                (7, 9),
                (3, 10),
                (4, 8),
                (5, 8),
                (8, 11),
                (9, 12),
                (10, 12),
                (11, 12),
            ],
        ),
        // 17-element domain of the preimage construction's golden map.
        "homo-p" => (
            17,
            vec![
                (1, 0),
                (2, 0),
                (3, 1),
                (6, 1),
                (7, 1),
                (3, 2),
                (6, 2),
                (7, 2),
                (4, 3),
                (5, 4),
                (11, 5),
                (13, 5),
                (12, 11),
                (14, 13),
                (15, 13),
                (16, 14),
                (16, 15),
                (8, 6),
                (9, 6),
                (8, 7),
                (10, 8),
                (10, 9),
            ],
        ),
        // 6-element tree codomain of the same map: top 0, 1 and 2 below it,
        // leaves 3,4 below 1 and 5 below 2.
        "homo-t" => (6, vec![(1, 0), (2, 0), (3, 1), (4, 1), (5, 2)]),
        _ => return Err(Error::UnknownName),
    };
    Ok((n, covers))
}

/// Looks up a fixture poset by name. See [`POSET_NAMES`].
pub fn named_poset(name: &str) -> Result<Poset> {
    let (n, covers) = covers_of(name)?;
    Poset::from_pairs(n, &covers)
}

/// The fixture's cover pairs, sorted ascending (as `covers()` returns them).
pub fn named_covers(name: &str) -> Result<Vec<(usize, usize)>> {
    let (_, mut covers) = covers_of(name)?;
    covers.sort_unstable();
    Ok(covers)
}

/// The width-`k` crown: maximals `0..k` over minimals `k..2k`, maximal `i`
/// covering minimals `k+i` and `k+((i+1) mod k)`. For `k = 3` this is
/// order-isomorphic to the `"crown"` fixture (which keeps the figure's own
/// labels).
pub fn crown(k: usize) -> Result<Poset> {
    if k < 2 {
        return Err(Error::GuardExceeded { what: "crown width", limit: 2, got: k });
    }
    let mut covers = Vec::with_capacity(2 * k);
    for i in 0..k {
        covers.push((k + i, i));
        covers.push((k + (i + 1) % k, i));
    }
    Poset::from_pairs(2 * k, &covers)
}

/// Golden table lookup: returns the name of the underlying poset and the
/// flat row-major table. See [`TABLE_NAMES`].
pub fn named_table(name: &str) -> Result<(&'static str, Vec<usize>)> {
    let (poset, rows): (&str, Vec<usize>) = match name {
        // The admissible right-normal operation on fig-normal.
        "table-normal" => (
            "fig-normal",
            vec![
                0, 1, 2, 3, 4, //
                0, 1, 2, 3, 4, //
                2, 2, 2, 4, 4, //
                3, 3, 4, 3, 4, //
                4, 4, 4, 4, 4,
            ],
        ),
        // The three admissible right-normal operations on fig-multiple.
        "table-multi-1" => (
            "fig-multiple",
            vec![
                0, 4, 2, 4, 4, //
                4, 1, 4, 3, 4, //
                2, 4, 2, 4, 4, //
                4, 3, 4, 3, 4, //
                4, 4, 4, 4, 4,
            ],
        ),
        "table-multi-2" => (
            "fig-multiple",
            vec![
                0, 3, 2, 3, 4, //
                2, 1, 2, 3, 4, //
                2, 3, 2, 3, 4, //
                2, 3, 2, 3, 4, //
                4, 4, 4, 4, 4,
            ],
        ),
        "table-multi-3" => (
            "fig-multiple",
            vec![
                0, 1, 2, 3, 4, //
                0, 1, 2, 3, 4, //
                2, 3, 2, 3, 4, //
                2, 3, 2, 3, 4, //
                4, 4, 4, 4, 4,
            ],
        ),
        // One of the admissible right-regular operations on a2-v.
        "table-a2-v" => (
            "a2-v",
            vec![
                0, 3, 3, 3, //
                0, 1, 3, 3, //
                0, 3, 2, 3, //
                0, 3, 3, 3,
            ],
        ),
        // The unique admissible right-regular operation on a2-n.
        "table-a2-n" => (
            "a2-n",
            vec![
                0, 2, 2, 3, //
                2, 1, 2, 3, //
                2, 2, 2, 3, //
                2, 3, 2, 3,
            ],
        ),
        _ => return Err(Error::UnknownName),
    };
    Ok((poset, rows))
}
