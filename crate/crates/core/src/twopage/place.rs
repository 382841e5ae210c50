//! Placement rules on the contracted picture of one frame: which side of a
//! cycle vertex an anchor goes to, tree ordering, ancillary slots, and the
//! seam that opens a block-vertex back into its outer cycle.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlaceError {
    #[error("rightmost cycle vertex needs room on its right (IP-3)")]
    RightmostNeedsRoom,
    #[error("leftmost cycle vertex needs room on its left (IP-4)")]
    LeftmostNeedsRoom,
    #[error("anchored trees depend on each other cyclically")]
    TreeCycle,
    #[error("no uncovered slot between consecutive anchors")]
    NoSlot,
    #[error("anchor labels do not increase along the spine")]
    LabelOrder,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Right,
    Left,
}

/// Sides for the anchors marked at one cycle vertex.
///
/// `marked[j]` says whether the j-th interior edge, counted counterclockwise
/// from the edge to the next cycle vertex, is marked. The result lists
/// `(edge index, side)` in left-to-right spine order.
pub fn anchor_sides(marked: &[bool], first: bool, last: bool) -> Result<Vec<(usize, Side)>, PlaceError> {
    let count = marked.iter().filter(|&&m| m).count();
    match (marked.len(), count) {
        (_, 0) => Ok(Vec::new()),
        (2, 2) => {
            if last {
                return Err(PlaceError::RightmostNeedsRoom);
            }
            Ok(vec![(1, Side::Right), (0, Side::Right)])
        }
        (1, 1) => Ok(vec![(0, if last { Side::Left } else { Side::Right })]),
        (2, 1) => {
            if marked[0] {
                if last {
                    return Err(PlaceError::RightmostNeedsRoom);
                }
                Ok(vec![(0, Side::Right)])
            } else {
                if first {
                    return Err(PlaceError::LeftmostNeedsRoom);
                }
                Ok(vec![(1, Side::Left)])
            }
        }
        _ => unreachable!("a cycle vertex has at most two interior edges"),
    }
}

/// Topological order of `n` trees under `deps` (`(a, b)`: draw `a` before `b`),
/// ties broken by the smaller `key`.
pub fn tree_order(n: usize, deps: &[(usize, usize)], key: &[usize]) -> Result<Vec<usize>, PlaceError> {
    let mut indeg = vec![0usize; n];
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in deps {
        out[a].push(b);
        indeg[b] += 1;
    }
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> =
        (0..n).filter(|&t| indeg[t] == 0).map(|t| Reverse((key[t], t))).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse((_, t))) = heap.pop() {
        order.push(t);
        for &s in &out[t] {
            indeg[s] -= 1;
            if indeg[s] == 0 {
                heap.push(Reverse((key[s], s)));
            }
        }
    }
    if order.len() != n {
        return Err(PlaceError::TreeCycle);
    }
    Ok(order)
}

/// First gap `i` in `0..width` (between offsets `i` and `i + 1`) that no arc nests.
/// Arcs are offset pairs inside `0..=width`.
pub fn free_slot(width: usize, arcs: &[(usize, usize)]) -> Option<usize> {
    let mut diff = vec![0i64; width + 1];
    for &(a, b) in arcs {
        let (a, b) = (a.min(b), a.max(b));
        diff[a] += 1;
        diff[b] -= 1;
    }
    let mut cover = 0;
    for (i, d) in diff.iter().take(width).enumerate() {
        cover += d;
        if cover == 0 {
            return Some(i);
        }
    }
    None
}

/// Indices of two alternating arcs, if any. Arcs are position pairs.
pub fn crossing_pair(arcs: &[(usize, usize)]) -> Option<(usize, usize)> {
    let mut idx: Vec<usize> = (0..arcs.len()).collect();
    let norm = |i: usize| {
        let (a, b) = arcs[i];
        (a.min(b), a.max(b))
    };
    idx.sort_unstable_by_key(|&i| {
        let (a, b) = norm(i);
        (a, Reverse(b))
    });
    let mut stack: Vec<usize> = Vec::new();
    for i in idx {
        let (a, b) = norm(i);
        while let Some(&top) = stack.last() {
            if norm(top).1 <= a {
                stack.pop();
            } else {
                break;
            }
        }
        if let Some(&top) = stack.last() {
            if norm(top).1 < b && norm(top).0 < a {
                return Some((top, i));
            }
        }
        stack.push(i);
    }
    None
}

/// Position of an edge around a contracted vertex, counterclockwise from the
/// rightward ray: top-right by growing span, top-left by shrinking span,
/// bottom-left by growing span, bottom-right by shrinking span.
pub type RotKey = (u8, i64);

pub fn rot_key(top: bool, rightward: bool, span: usize) -> RotKey {
    let s = span as i64;
    match (top, rightward) {
        (true, true) => (0, s),
        (true, false) => (1, -s),
        (false, false) => (2, s),
        (false, true) => (3, -s),
    }
}

/// Whether `keys` is a rotation of a non-decreasing sequence.
pub fn cyclic_sorted(keys: &[RotKey]) -> bool {
    let n = keys.len();
    (0..n).filter(|&i| keys[i] > keys[(i + 1) % n]).count() <= 1
}

/// Corner boundaries at which a contracted vertex can be opened.
///
/// Entries are the external edges in counterclockwise order, grouped by corner
/// (`corner[i]` non-decreasing, corners `0..ncorners` counterclockwise).
/// Boundary `t` sits between corner `t` and corner `t + 1`. It is usable when
/// the bottom edges just before it all lie in corner `t`, those just after it
/// all lie in corner `t + 1`, everything else is on top, and the geometric order
/// read from the top-right group onwards is sorted.
pub fn seam_boundaries(keys: &[RotKey], corner: &[u32], ncorners: usize) -> Vec<usize> {
    let n = keys.len();
    if n == 0 {
        return (0..ncorners).collect();
    }
    let top = |i: usize| keys[i].0 < 2;
    let mut out = Vec::new();
    let mut cum = 0usize;
    for t in 0..ncorners {
        while cum < n && corner[cum] as usize <= t {
            cum += 1;
        }
        let p = cum % n;
        let next = ((t + 1) % ncorners) as u32;
        let s: Vec<usize> = (0..n).map(|j| (p + j) % n).collect();
        let mut a = 0;
        while a < n && !top(s[a]) && corner[s[a]] == next {
            a += 1;
        }
        let mut b = n;
        while b > a && !top(s[b - 1]) && corner[s[b - 1]] == t as u32 {
            b -= 1;
        }
        if s[a..b].iter().any(|&i| !top(i)) {
            continue;
        }
        let seq = s[a..].iter().chain(s[..a].iter());
        let mut prev: Option<RotKey> = None;
        let mut sorted = true;
        for &i in seq {
            if prev.is_some_and(|q| q > keys[i]) {
                sorted = false;
                break;
            }
            prev = Some(keys[i]);
        }
        if sorted {
            out.push(t);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_mark_sides() {
        assert_eq!(anchor_sides(&[true], false, false).unwrap(), vec![(0, Side::Right)]);
        assert_eq!(anchor_sides(&[true], false, true).unwrap(), vec![(0, Side::Left)]);
        assert_eq!(anchor_sides(&[false, true], false, false).unwrap(), vec![(1, Side::Left)]);
        assert_eq!(anchor_sides(&[true, false], false, false).unwrap(), vec![(0, Side::Right)]);
        assert_eq!(anchor_sides(&[false, true], true, false), Err(PlaceError::LeftmostNeedsRoom));
    }

    #[test]
    fn two_marks_go_right_left_edge_first() {
        assert_eq!(
            anchor_sides(&[true, true], false, false).unwrap(),
            vec![(1, Side::Right), (0, Side::Right)]
        );
        assert_eq!(anchor_sides(&[true, true], false, true), Err(PlaceError::RightmostNeedsRoom));
    }

    #[test]
    fn nested_tree_first_and_ties_by_key() {
        assert_eq!(tree_order(2, &[(1, 0)], &[0, 5]).unwrap(), vec![1, 0]);
        assert_eq!(tree_order(3, &[], &[4, 2, 9]).unwrap(), vec![1, 0, 2]);
        assert_eq!(tree_order(1, &[], &[0]).unwrap(), vec![0]);
        assert_eq!(tree_order(2, &[(0, 1), (1, 0)], &[0, 1]), Err(PlaceError::TreeCycle));
    }

    #[test]
    fn slot_skips_covered_gaps() {
        assert_eq!(free_slot(3, &[]), Some(0));
        assert_eq!(free_slot(3, &[(0, 2)]), Some(2));
        assert_eq!(free_slot(3, &[(0, 2), (2, 3)]), None);
        assert_eq!(free_slot(4, &[(0, 1), (1, 2)]), Some(2));
    }

    #[test]
    fn laminar_arcs_pass() {
        assert_eq!(crossing_pair(&[(0, 5), (1, 2), (2, 4), (4, 5)]), None);
        assert!(crossing_pair(&[(0, 2), (1, 3)]).is_some());
        assert_eq!(crossing_pair(&[(0, 2), (0, 2), (2, 3)]), None);
    }

    #[test]
    fn seam_between_left_and_right_groups() {
        // corners 0,1,2; one top-right edge in corner 0, one top-left edge in corner 2
        let keys = [rot_key(true, true, 3), rot_key(true, false, 2)];
        let corner = [0, 2];
        assert_eq!(seam_boundaries(&keys, &corner, 3), vec![2]);
        // marked bottom-left edge alone in corner 1
        let keys = [rot_key(true, true, 3), rot_key(false, false, 1), rot_key(true, false, 2)];
        let corner = [0, 1, 2];
        assert!(seam_boundaries(&keys, &corner, 3).is_empty());
        let corner = [0, 1, 1];
        assert_eq!(seam_boundaries(&keys, &corner, 3), Vec::<usize>::new());
        // top edges in corner 0, bottom-left edge in corner 1: open on either side of corner 1
        let keys = [rot_key(true, true, 3), rot_key(true, false, 2), rot_key(false, false, 1)];
        let corner = [0, 0, 1];
        assert_eq!(seam_boundaries(&keys, &corner, 3), vec![0, 1]);
    }
}
