//! Structural detection: directed triangles, induced 4-cycles, typed walks,
//! vertex types over the eliminated layers, score sequences, and Frobenius
//! numbers.
//!
//! A walk is Type 1 when it passes through every vertex of some directed
//! 3-cycle, Type 2 when it covers some induced directed 4-cycle. Existence of
//! a typed (u, w)-walk reduces to reachability: enter the cycle anywhere,
//! circle it once, leave anywhere. That visits all cycle vertices, so the
//! reduction is exact, not a heuristic.

use crate::digraph::Digraph;
use crate::matrix::BitIter;
use crate::sink::{SinkSequence, TerminalKind};
use serde::Serialize;
use thiserror::Error;

/// All directed 3-cycles, one triple per cycle, least vertex first, in arc
/// order: (x, y, z) means x -> y -> z -> x.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleSet {
    pub triangles: Vec<(usize, usize, usize)>,
}

impl TriangleSet {
    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }
}

/// All induced directed 4-cycles, one quadruple per cycle, least vertex
/// first, in arc order: (a, b, c, d) means a -> b -> c -> d -> a with no
/// other arcs among the four.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HoleSet {
    pub holes: Vec<(usize, usize, usize, usize)>,
}

impl HoleSet {
    pub fn is_empty(&self) -> bool {
        self.holes.is_empty()
    }
}

/// Directed 3-cycles by scan over (a, b, c) with a the least vertex: b runs
/// over out-neighbors of a, then candidate c's are the word-wise AND of
/// out(b) and in(a), masked to c > a.
pub fn find_triangles(d: &Digraph) -> TriangleSet {
    let n = d.n();
    let a = d.adjacency();
    let transpose = a.transpose();
    let words = n.div_ceil(64).max(1);
    let mut triangles = Vec::new();
    let mut buf = vec![0u64; words];
    for x in 0..n {
        for y in a.row_bits(x) {
            if y < x {
                continue;
            }
            for (w, slot) in buf.iter_mut().enumerate() {
                *slot = a.row(y)[w] & transpose.row(x)[w];
            }
            // clear bits 0..=x so z > x keeps x the least vertex
            for (w, slot) in buf.iter_mut().enumerate() {
                if w < x / 64 {
                    *slot = 0;
                } else if w == x / 64 {
                    *slot &= !((1u64 << (x % 64)) - 1) & !(1u64 << (x % 64));
                }
            }
            for z in BitIter::new(&buf) {
                triangles.push((x, y, z));
            }
        }
    }
    triangles.sort_unstable();
    TriangleSet { triangles }
}

/// Induced directed 4-cycles. Inputs carrying a multipartite partition only
/// need the alternating scan: a 4-cycle chord-free in a complete multipartite
/// orientation forces opposite vertices into the same part. Plain digraphs
/// get the full quadruple scan.
pub fn find_holes4(d: &Digraph) -> HoleSet {
    match d.partition() {
        Some(parts) => holes4_alternating(d, parts),
        None => holes4_scan(d),
    }
}

fn holes4_scan(d: &Digraph) -> HoleSet {
    let n = d.n();
    let mut holes = Vec::new();
    for a in 0..n {
        for b in d.out_neighbors(a) {
            if b < a {
                continue;
            }
            for c in d.out_neighbors(b) {
                if c <= a || c == b || d.has_arc(a, c) || d.has_arc(c, a) {
                    continue;
                }
                for e in d.out_neighbors(c) {
                    if e <= a || e == b || !d.has_arc(e, a) {
                        continue;
                    }
                    if d.has_arc(b, e) || d.has_arc(e, b) {
                        continue;
                    }
                    holes.push((a, b, c, e));
                }
            }
        }
    }
    holes.sort_unstable();
    HoleSet { holes }
}

fn holes4_alternating(d: &Digraph, parts: &[usize]) -> HoleSet {
    let n = d.n();
    let mut holes = Vec::new();
    for a in 0..n {
        for c in a + 1..n {
            if parts[c] != parts[a] {
                continue;
            }
            // b on the a -> b -> c side, e on the c -> e -> a side
            for b in d.out_neighbors(a) {
                if b < a || !d.has_arc(b, c) {
                    continue;
                }
                for e in d.out_neighbors(c) {
                    if e > a && parts[e] == parts[b] && e != b && d.has_arc(e, a) {
                        holes.push((a, b, c, e));
                    }
                }
            }
        }
    }
    holes.sort_unstable();
    HoleSet { holes }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WalkKind {
    Type1,
    Type2,
}

/// Does a directed (u, w)-walk exist that covers all vertices of some
/// directed 3-cycle (Type 1) or induced 4-cycle (Type 2)?
pub fn has_typed_walk(d: &Digraph, u: usize, w: usize, kind: WalkKind) -> bool {
    typed_walk_witness(d, u, w, kind).is_some()
}

/// Explicit witness walk for [`has_typed_walk`]: u to the cycle, once fully
/// around it, then out to w. Vertex sequence, arcs between consecutive
/// entries; None when no qualifying cycle is reachable the right way.
pub fn typed_walk_witness(d: &Digraph, u: usize, w: usize, kind: WalkKind) -> Option<Vec<usize>> {
    let cycles: Vec<Vec<usize>> = match kind {
        WalkKind::Type1 => {
            find_triangles(d).triangles.iter().map(|&(x, y, z)| vec![x, y, z]).collect()
        }
        WalkKind::Type2 => {
            find_holes4(d).holes.iter().map(|&(a, b, c, e)| vec![a, b, c, e]).collect()
        }
    };
    let from_u = d.reach(u, false);
    let to_w = d.reach(w, true);
    for cycle in &cycles {
        let entry = cycle.iter().position(|&v| from_u[v]);
        let exit = cycle.iter().position(|&v| to_w[v]);
        if let (Some(i), Some(j)) = (entry, exit) {
            return Some(stitch_witness(d, u, w, cycle, i, j));
        }
    }
    None
}

fn stitch_witness(d: &Digraph, u: usize, w: usize, cycle: &[usize], i: usize, j: usize) -> Vec<usize> {
    let len = cycle.len();
    let mut walk = shortest_path(d, u, cycle[i]);
    // full lap from the entry, then on to the exit vertex
    let lap = len + (j + len - i) % len;
    for s in 1..=lap {
        walk.push(cycle[(i + s) % len]);
    }
    let tail = shortest_path(d, cycle[j], w);
    walk.extend_from_slice(&tail[1..]);
    walk
}

/// Walk from u to w that laps every listed cycle in order: BFS to some
/// vertex of the next cycle, once fully around it, repeat, then BFS to w.
/// None when any leg is unreachable.
pub(crate) fn chain_witness(d: &Digraph, u: usize, w: usize, cycles: &[&[usize]]) -> Option<Vec<usize>> {
    let mut walk = vec![u];
    for cyc in cycles {
        let end = *walk.last().unwrap();
        let reach = d.reach(end, false);
        let i = cyc.iter().position(|&v| reach[v])?;
        let seg = shortest_path(d, end, cyc[i]);
        walk.extend_from_slice(&seg[1..]);
        for s in 1..=cyc.len() {
            walk.push(cyc[(i + s) % cyc.len()]);
        }
    }
    let end = *walk.last().unwrap();
    if !d.reach(end, false)[w] {
        return None;
    }
    let seg = shortest_path(d, end, w);
    walk.extend_from_slice(&seg[1..]);
    Some(walk)
}

/// BFS path, inclusive of both endpoints; callers guarantee reachability.
fn shortest_path(d: &Digraph, from: usize, to: usize) -> Vec<usize> {
    let n = d.n();
    let mut parent = vec![usize::MAX; n];
    parent[from] = from;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            break;
        }
        for y in d.out_neighbors(x) {
            if parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    assert!(parent[to] != usize::MAX, "caller promised {from} reaches {to}");
    let mut path = vec![to];
    let mut at = to;
    while at != from {
        at = parent[at];
        path.push(at);
    }
    path.reverse();
    path
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VertexType {
    #[serde(rename = "type1")]
    Type1Only,
    #[serde(rename = "type2")]
    Type2Only,
    #[serde(rename = "both")]
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum VertexTypeError {
    #[error("vertex {0} survives sink elimination; types are defined on eliminated layers")]
    NotInU(usize),
    #[error("digraph has no directed cycle")]
    NoDirectedCycle,
    #[error("vertex {vertex}: surviving vertex {witness} has neither walk type uniformly")]
    TheoremViolation { vertex: usize, witness: usize },
}

/// Classifies an eliminated vertex w by which walk types reach it from every
/// survivor of sink elimination: Type1Only / Type2Only / Both mean all
/// survivors have a Type-1 / Type-2 / both kinds of (u, w)-walk.
/// TheoremViolation reports the first survivor breaking uniformity in both
/// types at once; it never fires on a multipartite tournament with a cycle.
pub fn vertex_type(d: &Digraph, ss: &SinkSequence, w: usize) -> Result<VertexType, VertexTypeError> {
    if ss.terminal == TerminalKind::AllSinks {
        return Err(VertexTypeError::NoDirectedCycle);
    }
    if ss.layer_of(w).is_none() {
        return Err(VertexTypeError::NotInU(w));
    }
    let survivors = ss.survivors();
    let all_t1 = survivors.iter().all(|&u| has_typed_walk(d, u, w, WalkKind::Type1));
    let all_t2 = survivors.iter().all(|&u| has_typed_walk(d, u, w, WalkKind::Type2));
    match (all_t1, all_t2) {
        (true, true) => Ok(VertexType::Both),
        (true, false) => Ok(VertexType::Type1Only),
        (false, true) => Ok(VertexType::Type2Only),
        (false, false) => {
            let witness = survivors
                .iter()
                .copied()
                .find(|&u| {
                    !has_typed_walk(d, u, w, WalkKind::Type1)
                        || !has_typed_walk(d, u, w, WalkKind::Type2)
                })
                .expect("some survivor fails each type");
            Err(VertexTypeError::TheoremViolation { vertex: w, witness })
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScoreSequence {
    pub scores: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("digraph is not a tournament: vertices {0} and {1} share no arc")]
pub struct NotTournament(pub usize, pub usize);

/// Nondecreasing out-degree sequence of a tournament.
pub fn score_sequence(d: &Digraph) -> Result<ScoreSequence, NotTournament> {
    for u in 0..d.n() {
        for v in u + 1..d.n() {
            if !d.has_arc(u, v) && !d.has_arc(v, u) {
                return Err(NotTournament(u, v));
            }
        }
    }
    let mut scores: Vec<usize> = (0..d.n()).map(|u| d.out_degree(u)).collect();
    scores.sort_unstable();
    debug_assert_eq!(scores.iter().sum::<usize>(), d.n() * (d.n() - 1) / 2);
    Ok(ScoreSequence { scores })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("set has gcd {0}, so arbitrarily large integers are unrepresentable")]
pub struct NotCoprime(pub u64);

/// Largest integer not expressible as a nonnegative combination of `ps`;
/// -1 when 1 is in the set (everything is representable). The sieve runs
/// until min(ps) consecutive representable values appear, after which adding
/// min(ps) reaches everything beyond them.
pub fn frobenius(ps: &[u64]) -> Result<i64, NotCoprime> {
    assert!(!ps.is_empty(), "need at least one generator");
    assert!(ps.iter().all(|&p| p > 0), "generators must be positive");
    let mut ps: Vec<u64> = ps.to_vec();
    ps.sort_unstable();
    ps.dedup();
    if ps[0] == 1 {
        return Ok(-1);
    }
    let g = ps.iter().fold(0usize, |g, &p| crate::util::gcd(g, p as usize));
    if g != 1 {
        return Err(NotCoprime(g as u64));
    }
    let smallest = ps[0] as usize;
    let mut limit = (ps[ps.len() - 1] as usize) * smallest + 2;
    loop {
        let mut representable = vec![false; limit];
        representable[0] = true;
        let mut run = 0usize;
        for b in 1..limit {
            representable[b] = ps.iter().any(|&p| {
                let p = p as usize;
                b >= p && representable[b - p]
            });
            run = if representable[b] { run + 1 } else { 0 };
            if run == smallest {
                let frontier = b + 1 - smallest;
                let f = (1..frontier).rev().find(|&x| !representable[x]);
                return Ok(f.expect("1 is never representable when min >= 2") as i64);
            }
        }
        limit *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{random_kpartite, Seed};
    use crate::sink::sink_sequence;

    fn sc_tournament4() -> Digraph {
        Digraph::new(4, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 1), (2, 3)]).unwrap()
    }

    /// parts {0},{1},{2,3}: triangle 0 -> 1 -> 2 -> 0 feeding sink 3
    fn triangle_plus_sink() -> Digraph {
        Digraph::multipartite(4, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 3)], None).unwrap()
    }

    /// parts {0,2},{1,3,4}: hole 0 -> 1 -> 2 -> 3 -> 0 feeding sink 4
    fn hole_plus_sink() -> Digraph {
        Digraph::multipartite(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 4)], None).unwrap()
    }

    /// parts {0,1},{2,3},{4,5}: triangle 0 -> 2 -> 4 -> 0 and induced
    /// 4-cycle 0 -> 2 -> 1 -> 3 -> 0 both feed sink 5
    fn both_types_fixture() -> Digraph {
        Digraph::multipartite(
            6,
            &[
                (0, 2),
                (2, 1),
                (1, 3),
                (3, 0),
                (2, 4),
                (4, 0),
                (1, 4),
                (3, 4),
                (0, 5),
                (1, 5),
                (2, 5),
                (3, 5),
            ],
            Some(vec![0, 0, 1, 1, 2, 2]),
        )
        .unwrap()
    }

    fn oracle_triangles(d: &Digraph) -> Vec<(usize, usize, usize)> {
        let n = d.n();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if x < y && x < z && y != z && d.has_arc(x, y) && d.has_arc(y, z) && d.has_arc(z, x) {
                        out.push((x, y, z));
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    fn oracle_holes(d: &Digraph) -> Vec<(usize, usize, usize, usize)> {
        let n = d.n();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for e in 0..n {
                        let four = [a, b, c, e];
                        let distinct = (1..4).all(|i| !four[..i].contains(&four[i]));
                        if !distinct || four[1..].iter().any(|&v| v < a) {
                            continue;
                        }
                        let cycle = d.has_arc(a, b) && d.has_arc(b, c) && d.has_arc(c, e) && d.has_arc(e, a);
                        let chordless = !d.has_arc(a, c)
                            && !d.has_arc(c, a)
                            && !d.has_arc(b, e)
                            && !d.has_arc(e, b);
                        if cycle && chordless {
                            out.push((a, b, c, e));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    #[test]
    fn triangles_on_fixtures() {
        let tri = Digraph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(find_triangles(&tri).triangles, vec![(0, 1, 2)]);

        let trans = crate::generate::transitive_tournament(5);
        assert!(find_triangles(&trans).is_empty());

        assert_eq!(find_triangles(&sc_tournament4()).triangles, oracle_triangles(&sc_tournament4()));
    }

    #[test]
    fn triangles_match_oracle_on_random_tournaments() {
        for seed in 0..30u64 {
            let d = random_kpartite(&[1; 7], Seed(seed));
            assert_eq!(find_triangles(&d).triangles, oracle_triangles(&d), "seed={seed}");
        }
        // word-boundary sizes
        let d = random_kpartite(&[1; 66], Seed(7));
        assert_eq!(find_triangles(&d).triangles, oracle_triangles(&d));
    }

    #[test]
    fn holes_on_fixtures() {
        let four = Digraph::multipartite(4, &[(0, 1), (1, 2), (2, 3), (3, 0)], None).unwrap();
        assert_eq!(find_holes4(&four).holes, vec![(0, 1, 2, 3)]);

        let tri = Digraph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(find_holes4(&tri).is_empty());

        // quadruples through the sink are rejected: 4 is never on a cycle
        assert_eq!(find_holes4(&hole_plus_sink()).holes, vec![(0, 1, 2, 3)]);
    }

    #[test]
    fn alternating_scan_agrees_with_generic_scan() {
        for seed in 0..40u64 {
            let flagged = random_kpartite(&[2, 3, 2], Seed(seed));
            let plain = Digraph::new(flagged.n(), &flagged.arcs()).unwrap();
            assert_eq!(
                find_holes4(&flagged).holes,
                find_holes4(&plain).holes,
                "seed={seed}"
            );
            assert_eq!(find_holes4(&plain).holes, oracle_holes(&plain), "seed={seed}");
        }
    }

    #[test]
    fn typed_walk_existence_on_fixtures() {
        let d = triangle_plus_sink();
        assert!(has_typed_walk(&d, 0, 3, WalkKind::Type1));
        assert!(!has_typed_walk(&d, 0, 3, WalkKind::Type2));

        let trans = crate::generate::transitive_tournament(5);
        assert!(!has_typed_walk(&trans, 4, 0, WalkKind::Type1));

        let h = hole_plus_sink();
        assert!(has_typed_walk(&h, 1, 4, WalkKind::Type2));
        assert!(!has_typed_walk(&h, 1, 4, WalkKind::Type1));
        // the sink reaches nothing, so no walk leaves it
        assert!(!has_typed_walk(&h, 4, 4, WalkKind::Type2));
    }

    #[test]
    fn witness_walks_are_genuine_walks_covering_a_cycle() {
        let cases = [
            (triangle_plus_sink(), 0, 3, WalkKind::Type1),
            (hole_plus_sink(), 1, 4, WalkKind::Type2),
            (both_types_fixture(), 4, 5, WalkKind::Type1),
            (both_types_fixture(), 4, 5, WalkKind::Type2),
        ];
        for (d, u, w, kind) in &cases {
            let walk = typed_walk_witness(d, *u, *w, *kind).expect("witness exists");
            assert_eq!(walk[0], *u);
            assert_eq!(*walk.last().unwrap(), *w);
            for pair in walk.windows(2) {
                assert!(d.has_arc(pair[0], pair[1]), "walk {walk:?} breaks at {pair:?}");
            }
            let covered = match kind {
                WalkKind::Type1 => find_triangles(d)
                    .triangles
                    .iter()
                    .any(|&(x, y, z)| [x, y, z].iter().all(|v| walk.contains(v))),
                WalkKind::Type2 => find_holes4(d)
                    .holes
                    .iter()
                    .any(|&(a, b, c, e)| [a, b, c, e].iter().all(|v| walk.contains(v))),
            };
            assert!(covered, "walk {walk:?} covers no qualifying cycle");
        }
    }

    #[test]
    fn vertex_types_on_the_three_fixtures() {
        let d = triangle_plus_sink();
        let ss = sink_sequence(&d);
        assert_eq!(vertex_type(&d, &ss, 3), Ok(VertexType::Type1Only));

        let h = hole_plus_sink();
        let ss = sink_sequence(&h);
        assert_eq!(vertex_type(&h, &ss, 4), Ok(VertexType::Type2Only));

        let b = both_types_fixture();
        let ss = sink_sequence(&b);
        assert_eq!(ss.zeta, 1);
        assert_eq!(vertex_type(&b, &ss, 5), Ok(VertexType::Both));
    }

    #[test]
    fn vertex_type_preconditions() {
        let d = triangle_plus_sink();
        let ss = sink_sequence(&d);
        assert_eq!(vertex_type(&d, &ss, 0), Err(VertexTypeError::NotInU(0)));

        let trans = crate::generate::transitive_tournament(4);
        let ss = sink_sequence(&trans);
        assert_eq!(vertex_type(&trans, &ss, 0), Err(VertexTypeError::NoDirectedCycle));
    }

    #[test]
    fn vertex_type_serializes_to_short_names() {
        assert_eq!(serde_json::to_string(&VertexType::Type1Only).unwrap(), "\"type1\"");
        assert_eq!(serde_json::to_string(&VertexType::Type2Only).unwrap(), "\"type2\"");
        assert_eq!(serde_json::to_string(&VertexType::Both).unwrap(), "\"both\"");
    }

    #[test]
    fn score_sequences() {
        let trans = crate::generate::transitive_tournament(4);
        assert_eq!(score_sequence(&trans).unwrap().scores, vec![0, 1, 2, 3]);

        let tri = Digraph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(score_sequence(&tri).unwrap().scores, vec![1, 1, 1]);

        let sink_tri =
            Digraph::new(4, &[(1, 2), (2, 3), (3, 1), (1, 0), (2, 0), (3, 0)]).unwrap();
        assert_eq!(score_sequence(&sink_tri).unwrap().scores, vec![0, 2, 2, 2]);

        assert_eq!(score_sequence(&hole_plus_sink()), Err(NotTournament(0, 2)));
    }

    #[test]
    fn frobenius_known_values() {
        assert_eq!(frobenius(&[3, 4]), Ok(5));
        assert_eq!(frobenius(&[2, 3]), Ok(1));
        assert_eq!(frobenius(&[3, 4, 5]), Ok(2));
        assert_eq!(frobenius(&[1, 7]), Ok(-1));
        assert_eq!(frobenius(&[6, 4]), Err(NotCoprime(2)));
        // order and duplicates do not matter
        assert_eq!(frobenius(&[4, 3, 4]), Ok(5));
    }

    #[test]
    fn frobenius_matches_brute_force_representability() {
        use rand_chacha::rand_core::{RngCore, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5151);
        let mut checked = 0;
        while checked < 50 {
            let len = 2 + (rng.next_u64() % 3) as usize;
            let ps: Vec<u64> = (0..len).map(|_| 2 + rng.next_u64() % 39).collect();
            if ps.iter().fold(0usize, |g, &p| crate::util::gcd(g, p as usize)) != 1 {
                continue;
            }
            checked += 1;
            let f = frobenius(&ps).unwrap();
            let cap = 4 * (*ps.iter().max().unwrap() as usize).pow(2);
            let mut representable = vec![false; cap];
            representable[0] = true;
            for b in 1..cap {
                representable[b] =
                    ps.iter().any(|&p| b >= p as usize && representable[b - p as usize]);
            }
            let brute = (0..cap).rev().find(|&b| !representable[b]).map(|b| b as i64).unwrap_or(-1);
            assert_eq!(f, brute, "ps={ps:?}");
        }
    }
}
