//! Quasi-eccentric sets, distance vectors relative to a face, and the
//! classification of a face's quasi-eccentric set into level/near-set
//! classes together with the case dispatch used by the synthesis.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::plane::{FaceRef, PlaneGraph};

/// Quasi-eccentric and eccentric vertices of a target set, with the two
/// associated distances. A vertex `u` is quasi-eccentric to `S` when every
/// vertex `v` admits some `s` in `S` with `d(u,s) >= d(v,s)`; eccentric
/// vertices (maximum distance from `S`) always qualify.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QccResult {
    pub target: Vec<usize>,
    pub qcc: Vec<usize>,
    pub ecc: Vec<usize>,
    /// `e(S)`: distance from `S` to its eccentric vertices.
    pub eccentricity: u32,
    /// `q(S)`: distance from `S` to its quasi-eccentric vertices.
    pub quasi_eccentricity: u32,
}

/// Compute the quasi-eccentric set of `s` by the definitional check against
/// the distance matrix.
pub fn qcc_set(g: &Graph, s: &[usize]) -> Result<QccResult> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.order();
    let mut target = s.to_vec();
    target.sort_unstable();
    target.dedup();
    for &v in &target {
        if v >= n {
            return Err(Error::OutOfRange(v, n));
        }
    }
    let dm = g.distances();
    let dist_to_s = |u: usize| -> u32 {
        target.iter().map(|&t| dm.dist(u, t)).min().expect("target non-empty")
    };
    let e = (0..n).map(dist_to_s).max().expect("n >= 1");
    let ecc: Vec<usize> = (0..n).filter(|&u| dist_to_s(u) == e).collect();

    let mut qcc = Vec::new();
    for u in 0..n {
        let dominated = (0..n).any(|v| {
            // v beats u when it is strictly farther from every target vertex
            target.iter().all(|&t| dm.dist(v, t) > dm.dist(u, t))
        });
        if !dominated {
            qcc.push(u);
        }
    }
    let q = qcc.iter().map(|&u| dist_to_s(u)).min().expect("qcc contains ecc");
    Ok(QccResult { target, qcc, ecc, eccentricity: e, quasi_eccentricity: q })
}

/// One corner of a triangular face, in the canonical (sorted-vertex) order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Corner {
    X,
    Y,
    Z,
}

impl Corner {
    pub const ALL: [Corner; 3] = [Corner::X, Corner::Y, Corner::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Corner {
        Corner::ALL[i]
    }

    pub fn letter(self) -> char {
        match self {
            Corner::X => 'x',
            Corner::Y => 'y',
            Corner::Z => 'z',
        }
    }
}

/// A set of corners, kept as a tiny bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CornerSet(u8);

impl FromIterator<Corner> for CornerSet {
    fn from_iter<I: IntoIterator<Item = Corner>>(it: I) -> Self {
        let mut s = CornerSet(0);
        for c in it {
            s.insert(c);
        }
        s
    }
}

impl CornerSet {
    pub const EMPTY: CornerSet = CornerSet(0);
    pub const FULL: CornerSet = CornerSet(0b111);

    pub fn insert(&mut self, c: Corner) {
        self.0 |= 1 << c.index();
    }

    pub fn contains(self, c: Corner) -> bool {
        self.0 & (1 << c.index()) != 0
    }

    pub fn complement(self) -> CornerSet {
        CornerSet(!self.0 & 0b111)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Corner> {
        Corner::ALL.into_iter().filter(move |c| self.contains(*c))
    }

    /// Apply a role permutation: corner `c` becomes `perm[c]`.
    pub fn permuted(self, perm: &[Corner; 3]) -> CornerSet {
        CornerSet::from_iter(self.iter().map(|c| perm[c.index()]))
    }
}

impl fmt::Display for CornerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.iter() {
            write!(f, "{}", c.letter())?;
        }
        Ok(())
    }
}

/// Ordered pair of adjacent corners in cyclic order; used to name the far
/// pair vertices of decorated gadgets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CornerPair {
    XY,
    YZ,
    ZX,
}

impl CornerPair {
    pub const ALL: [CornerPair; 3] = [CornerPair::XY, CornerPair::YZ, CornerPair::ZX];

    pub fn corners(self) -> (Corner, Corner) {
        match self {
            CornerPair::XY => (Corner::X, Corner::Y),
            CornerPair::YZ => (Corner::Y, Corner::Z),
            CornerPair::ZX => (Corner::Z, Corner::X),
        }
    }

    /// The corner whose far-single vertex anchors this pair's vertex.
    pub fn lead(self) -> Corner {
        self.corners().0
    }

    /// The corner not in the pair.
    pub fn other(self) -> Corner {
        match self {
            CornerPair::XY => Corner::Z,
            CornerPair::YZ => Corner::X,
            CornerPair::ZX => Corner::Y,
        }
    }

    pub fn as_set(self) -> CornerSet {
        let (a, b) = self.corners();
        CornerSet::from_iter([a, b])
    }

    /// The unordered pair `{a, b}` as a cyclic `CornerPair`.
    pub fn from_set(s: CornerSet) -> Option<CornerPair> {
        CornerPair::ALL.into_iter().find(|p| p.as_set() == s)
    }

    pub fn name(self) -> &'static str {
        match self {
            CornerPair::XY => "xy",
            CornerPair::YZ => "yz",
            CornerPair::ZX => "zx",
        }
    }
}

/// The triple of distances from a vertex to the three corners of a face,
/// listed in the face's canonical corner order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct DistanceVector(pub [u32; 3]);

impl DistanceVector {
    pub fn level(self) -> u32 {
        *self.0.iter().min().expect("three entries")
    }

    /// Corners realizing the minimum distance.
    pub fn near_set(self) -> CornerSet {
        let lvl = self.level();
        CornerSet::from_iter(
            Corner::ALL.into_iter().filter(|c| self.0[c.index()] == lvl),
        )
    }
}

/// Distance vector of `u` relative to a triangular face.
pub fn distance_vector(g: &Graph, u: usize, face: &FaceRef) -> Result<DistanceVector> {
    let t = face.triangle()?;
    let dm = g.distances();
    Ok(DistanceVector([dm.dist(u, t[0]), dm.dist(u, t[1]), dm.dist(u, t[2])]))
}

/// A class of quasi-eccentric vertices: the common distance level to the
/// face and the set of corners realizing it (the rest sit one level higher).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct ClassKey {
    pub level: u32,
    pub near: CornerSet,
}

impl fmt::Display for ClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})_{}", self.level, self.near)?;
        let far = self.near.complement();
        if !far.is_empty() {
            write!(f, "^{}", far)?;
        }
        Ok(())
    }
}

/// Classification of a face's quasi-eccentric set. `base` is the face's
/// quasi-eccentricity `k`; every member sits at level `k` or `k + 1`.
#[derive(Debug, Clone)]
pub struct FaceConfiguration {
    pub face: FaceRef,
    /// Corner order: sorted boundary vertices of the face.
    pub corners: [usize; 3],
    pub base: u32,
    pub classes: BTreeMap<ClassKey, Vec<usize>>,
    /// The set of distinct distance vectors over the quasi-eccentric set.
    pub vectors: Vec<DistanceVector>,
    pub qcc: QccResult,
}

impl FaceConfiguration {
    pub fn members(&self, level: u32, near: CornerSet) -> &[usize] {
        self.classes
            .get(&ClassKey { level, near })
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    fn occupied(&self, level: u32, near: CornerSet) -> bool {
        !self.members(level, near).is_empty()
    }

    /// Level-(k+1) class with a single near corner.
    pub fn high_single(&self, c: Corner) -> bool {
        self.occupied(self.base + 1, CornerSet::from_iter([c]))
    }

    /// Level-(k+1) class whose near set is the given pair.
    pub fn high_pair(&self, p: CornerPair) -> bool {
        self.occupied(self.base + 1, p.as_set())
    }

    /// Level-(k+1) class near all three corners.
    pub fn high_full(&self) -> bool {
        self.occupied(self.base + 1, CornerSet::FULL)
    }

    /// Level-k class with a single near corner.
    pub fn low_single(&self, c: Corner) -> bool {
        self.occupied(self.base, CornerSet::from_iter([c]))
    }

    /// Level-k class whose near set is the given pair.
    pub fn low_pair(&self, p: CornerPair) -> bool {
        self.occupied(self.base, p.as_set())
    }

    /// Any level-k class with `c` among its near corners.
    pub fn low_touches(&self, c: Corner) -> bool {
        self.classes
            .iter()
            .any(|(k, m)| k.level == self.base && k.near.contains(c) && !m.is_empty())
    }

    pub fn has_high_level(&self) -> bool {
        self.classes.keys().any(|k| k.level == self.base + 1)
    }
}

/// Classify every quasi-eccentric vertex of a face into its class and check
/// the structural constraints that the synthesis relies on. A constraint
/// failure indicates a bug and surfaces as `InternalInvariantViolation`.
pub fn face_configuration(h: &PlaneGraph, face: &FaceRef) -> Result<FaceConfiguration> {
    if !h.is_maximal_plane() || h.graph().order() < 4 {
        return Err(Error::NotMaximalPlanar(
            "face configurations are defined for maximal plane graphs of order >= 4".into(),
        ));
    }
    let corners = face.triangle()?;
    let g = h.graph();
    let qcc = qcc_set(g, &corners)?;
    let base = qcc.quasi_eccentricity;

    let mut classes: BTreeMap<ClassKey, Vec<usize>> = BTreeMap::new();
    let mut vectors = Vec::new();
    for &u in &qcc.qcc {
        let vec = distance_vector(g, u, face)?;
        let key = ClassKey { level: vec.level(), near: vec.near_set() };
        classes.entry(key).or_default().push(u);
        if !vectors.contains(&vec) {
            vectors.push(vec);
        }
    }
    vectors.sort_unstable();
    let cfg = FaceConfiguration { face: face.clone(), corners, base, classes, vectors, qcc };
    validate_configuration(&cfg)?;
    Ok(cfg)
}

fn validate_configuration(cfg: &FaceConfiguration) -> Result<()> {
    let k = cfg.base;
    let fail = |msg: String| Err(Error::InternalInvariantViolation(msg));

    // members live on exactly two adjacent levels
    for key in cfg.classes.keys() {
        if key.level != k && key.level != k + 1 {
            return fail(format!("class {key} outside levels {k}/{}", k + 1));
        }
        if key.near.is_empty() {
            return fail(format!("class {key} with empty near set"));
        }
    }
    // a full near set at level k forbids the higher level entirely
    if cfg.occupied(k, CornerSet::FULL) && cfg.has_high_level() {
        return fail("level-k full class coexists with level-(k+1) members".into());
    }
    // the same near set cannot be occupied on both levels (pairs and singles)
    for near in [
        CornerSet::from_iter([Corner::X]),
        CornerSet::from_iter([Corner::Y]),
        CornerSet::from_iter([Corner::Z]),
        CornerPair::XY.as_set(),
        CornerPair::YZ.as_set(),
        CornerPair::ZX.as_set(),
    ] {
        if cfg.occupied(k, near) && cfg.occupied(k + 1, near) {
            return fail(format!("near set {near} occupied on both levels"));
        }
    }
    // a lone high corner empties that corner's low classes
    for c in Corner::ALL {
        if cfg.high_single(c) && cfg.low_touches(c) {
            return fail(format!("high single at {} coexists with low classes touching it", c.letter()));
        }
    }
    // at most two lone high corners
    let singles = Corner::ALL.iter().filter(|&&c| cfg.high_single(c)).count();
    if singles == 3 {
        return fail("all three high single classes occupied".into());
    }
    // two lone high corners force the third corner's lone low class
    let occupied_singles: Vec<Corner> =
        Corner::ALL.into_iter().filter(|&c| cfg.high_single(c)).collect();
    if occupied_singles.len() == 2 {
        for p in CornerPair::ALL {
            if cfg.low_pair(p) {
                return fail(format!(
                    "low pair {} coexists with two high singles",
                    p.name()
                ));
            }
        }
        if cfg.occupied(k, CornerSet::FULL) {
            return fail("low full class coexists with two high singles".into());
        }
        let third = Corner::ALL
            .into_iter()
            .find(|c| !occupied_singles.contains(c))
            .expect("one corner left");
        if !cfg.low_single(third) {
            return fail(format!(
                "two high singles but no low single at {}",
                third.letter()
            ));
        }
    }
    Ok(())
}

/// The dispatch cases for a face configuration, as used by the synthesis.
/// `TwoHighSingles` etc. name the shape of the level-(k+1) classes; the
/// numbering of the variants follows the host-construction table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseKind {
    Case1,
    Case3,
    Case4_1,
    Case4_2,
    Case5_1,
    Case5_2,
    Case5_3,
    Case6,
}

impl CaseKind {
    pub fn name(self) -> &'static str {
        match self {
            CaseKind::Case1 => "Case1",
            CaseKind::Case3 => "Case3",
            CaseKind::Case4_1 => "Case4_1",
            CaseKind::Case4_2 => "Case4_2",
            CaseKind::Case5_1 => "Case5_1",
            CaseKind::Case5_2 => "Case5_2",
            CaseKind::Case5_3 => "Case5_3",
            CaseKind::Case6 => "Case6",
        }
    }
}

/// A case label plus the role permutation normalizing the configuration:
/// role `r` is played by face corner `roles[r.index()]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CaseLabel {
    pub kind: CaseKind,
    pub roles: [Corner; 3],
}

impl CaseLabel {
    /// The actual face vertex playing role `r`.
    pub fn vertex(&self, cfg: &FaceConfiguration, r: Corner) -> usize {
        cfg.corners[self.roles[r.index()].index()]
    }
}

const ROLE_PERMS: [[Corner; 3]; 6] = [
    [Corner::X, Corner::Y, Corner::Z],
    [Corner::X, Corner::Z, Corner::Y],
    [Corner::Y, Corner::X, Corner::Z],
    [Corner::Y, Corner::Z, Corner::X],
    [Corner::Z, Corner::X, Corner::Y],
    [Corner::Z, Corner::Y, Corner::X],
];

/// Find the unique case matched by the configuration, trying all six corner
/// permutations and returning the lexicographically least (case, permutation)
/// pair. The all-three-high-singles pattern is provably unreachable and
/// reports `UnclassifiableConfiguration`.
pub fn classify_case(cfg: &FaceConfiguration) -> Result<CaseLabel> {
    let mut best: Option<CaseLabel> = None;
    for roles in ROLE_PERMS {
        // under this permutation, role r is played by corner roles[r]
        let hs = |r: Corner| cfg.high_single(roles[r.index()]);
        let hp = |p: CornerPair| {
            let (a, b) = p.corners();
            let set = CornerSet::from_iter([roles[a.index()], roles[b.index()]]);
            cfg.occupied(cfg.base + 1, set)
        };
        let lp = |p: CornerPair| {
            let (a, b) = p.corners();
            let set = CornerSet::from_iter([roles[a.index()], roles[b.index()]]);
            cfg.occupied(cfg.base, set)
        };
        let kind = if !cfg.has_high_level() {
            Some(CaseKind::Case1)
        } else if hs(Corner::X) && hs(Corner::Y) && hs(Corner::Z) {
            return Err(Error::UnclassifiableConfiguration(
                "all three high single classes occupied".into(),
            ));
        } else if hs(Corner::X) && hs(Corner::Y) && !hs(Corner::Z) {
            Some(CaseKind::Case3)
        } else if hs(Corner::X) && !hs(Corner::Y) && !hs(Corner::Z) {
            if lp(CornerPair::YZ) {
                Some(CaseKind::Case4_2)
            } else {
                Some(CaseKind::Case4_1)
            }
        } else if !hs(Corner::X) && !hs(Corner::Y) && !hs(Corner::Z) {
            let (bxy, byz, bzx) = (hp(CornerPair::XY), hp(CornerPair::YZ), hp(CornerPair::ZX));
            match (bxy, bzx, byz) {
                (true, true, true) => Some(CaseKind::Case5_1),
                (true, true, false) => Some(CaseKind::Case5_2),
                (true, false, false) => Some(CaseKind::Case5_3),
                (false, false, false) => {
                    if cfg.high_full() {
                        Some(CaseKind::Case6)
                    } else {
                        return Err(Error::UnclassifiableConfiguration(
                            "high level occupied but no class found".into(),
                        ));
                    }
                }
                _ => None,
            }
        } else {
            None
        };
        if let Some(kind) = kind {
            let cand = CaseLabel { kind, roles };
            let better = match &best {
                None => true,
                Some(b) => (kind, roles) < (b.kind, b.roles),
            };
            if better {
                best = Some(cand);
            }
        }
    }
    best.ok_or_else(|| {
        Error::UnclassifiableConfiguration(format!(
            "no permutation matches face {:?}",
            cfg.corners
        ))
    })
}
