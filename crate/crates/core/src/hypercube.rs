//! Relay-map construction: exclusive-law checking, singularity-removal
//! constraints, greedy completion into a 4-fold Latin hyper-cube, and
//! persistence of the per-subspace codebook.

use std::collections::HashMap;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use rayon::prelude::*;

use crate::constellation::{Constellation, GaussianInt};
use crate::fadespace::{enumerate_singular_subspaces, DifferenceVector, SubspaceClass};
use crate::Error;

pub const SIDE: usize = 4;
pub const CELLS: usize = SIDE * SIDE * SIDE * SIDE;

/// One cell of the relay map: the four users' constellation indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymbolTuple {
    pub a: u8,
    pub b: u8,
    pub c: u8,
    pub d: u8,
}

impl SymbolTuple {
    pub fn new(a: u8, b: u8, c: u8, d: u8) -> Self {
        debug_assert!(a < 4 && b < 4 && c < 4 && d < 4);
        SymbolTuple { a, b, c, d }
    }

    /// Flat row-major index `a*64 + b*16 + c*4 + d`.
    pub fn index(self) -> usize {
        usize::from(self.a) * 64 + usize::from(self.b) * 16 + usize::from(self.c) * 4
            + usize::from(self.d)
    }

    pub fn from_index(i: usize) -> Self {
        debug_assert!(i < CELLS);
        SymbolTuple {
            a: (i / 64) as u8,
            b: (i / 16 % 4) as u8,
            c: (i / 4 % 4) as u8,
            d: (i % 4) as u8,
        }
    }

    pub fn coord(self, pos: usize) -> u8 {
        match pos {
            0 => self.a,
            1 => self.b,
            2 => self.c,
            3 => self.d,
            _ => panic!("coordinate out of range"),
        }
    }

    /// Whether the two tuples lie in a common hyperplane (agree in some
    /// coordinate).
    pub fn shares_coordinate(self, other: SymbolTuple) -> bool {
        self.a == other.a || self.b == other.b || self.c == other.c || self.d == other.d
    }

    /// Entry-wise symbol difference `x - x'` of the two cells.
    pub fn diff(self, other: SymbolTuple, cons: &Constellation) -> DifferenceVector {
        let e = |k: u8, k2: u8| cons.exact_point(usize::from(k)) - cons.exact_point(usize::from(k2));
        DifferenceVector([
            e(self.a, other.a),
            e(self.b, other.b),
            e(self.c, other.c),
            e(self.d, other.d),
        ])
    }

    pub fn all() -> impl Iterator<Item = SymbolTuple> {
        (0..CELLS).map(SymbolTuple::from_index)
    }
}

/// A relay map: one label per transmit tuple. Labels are 1-based and
/// contiguous (`1..=label_count`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterMap {
    labels: Vec<u16>,
    label_count: u16,
}

impl ClusterMap {
    /// Builds a map from 256 labels in flat-index order, validating that the
    /// label values are exactly `1..=t` for some `t`.
    pub fn from_labels(labels: Vec<u16>) -> Result<Self, Error> {
        if labels.len() != CELLS {
            return Err(Error::Format(format!(
                "expected {CELLS} labels, got {}",
                labels.len()
            )));
        }
        let t = *labels.iter().max().unwrap();
        if t == 0 {
            return Err(Error::Format("labels must be 1-based".into()));
        }
        let mut seen = vec![false; usize::from(t) + 1];
        for &l in &labels {
            if l == 0 {
                return Err(Error::Format("labels must be 1-based".into()));
            }
            seen[usize::from(l)] = true;
        }
        if let Some(missing) = (1..=t).find(|&l| !seen[usize::from(l)]) {
            return Err(Error::Format(format!("label {missing} never occurs")));
        }
        Ok(ClusterMap {
            labels,
            label_count: t,
        })
    }

    pub fn label(&self, x: SymbolTuple) -> u16 {
        self.labels[x.index()]
    }

    pub fn labels(&self) -> &[u16] {
        &self.labels
    }

    /// Number of distinct labels (cluster count t).
    pub fn label_count(&self) -> u16 {
        self.label_count
    }

    pub fn has_label(&self, l: u16) -> bool {
        l >= 1 && l <= self.label_count
    }

    /// All tuples carrying a given label.
    pub fn cluster(&self, l: u16) -> Vec<SymbolTuple> {
        SymbolTuple::all().filter(|x| self.label(*x) == l).collect()
    }
}

/// True iff no label repeats within any hyperplane obtained by fixing one
/// coordinate — the Latin hyper-cube property, equivalent to the exclusive
/// law for the relay map.
pub fn satisfies_exclusive_law(m: &ClusterMap) -> bool {
    let mut seen = vec![0u32; usize::from(m.label_count) + 1];
    let mut stamp = 0u32;
    for pos in 0..4 {
        for v in 0..4u8 {
            stamp += 1;
            for x in SymbolTuple::all() {
                if x.coord(pos) != v {
                    continue;
                }
                let l = usize::from(m.label(x));
                if seen[l] == stamp {
                    return false;
                }
                seen[l] = stamp;
            }
        }
    }
    true
}

/// Partition of the 256 tuples into singularity-removal constraints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintPartition {
    /// Part id per flat tuple index.
    part_of: Vec<usize>,
    /// Member tuples per part, sorted by flat index.
    parts: Vec<Vec<SymbolTuple>>,
}

impl ConstraintPartition {
    pub fn parts(&self) -> &[Vec<SymbolTuple>] {
        &self.parts
    }

    pub fn part_of(&self, x: SymbolTuple) -> usize {
        self.part_of[x.index()]
    }

    pub fn same_part(&self, x: SymbolTuple, y: SymbolTuple) -> bool {
        self.part_of[x.index()] == self.part_of[y.index()]
    }

    /// The discrete partition (every tuple its own part).
    pub fn singletons() -> Self {
        ConstraintPartition {
            part_of: (0..CELLS).collect(),
            parts: (0..CELLS).map(|i| vec![SymbolTuple::from_index(i)]).collect(),
        }
    }
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        // root at the smaller index keeps part ids deterministic
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        parent[hi] = lo;
    }
}

/// Merges every tuple pair whose entry-wise difference lies in the orbit of
/// `s` (Definition of the singularity-removal constraint: those pairs collide
/// at the relay for fades on the subspace, so they must share a cluster).
pub fn build_constraints(s: &SubspaceClass) -> ConstraintPartition {
    let cons = Constellation::psk(4).expect("M=4 supported");
    let points: Vec<GaussianInt> = (0..4).map(|k| cons.exact_point(k)).collect();
    let index_of = |p: GaussianInt| points.iter().position(|&q| q == p);

    let mut parent: Vec<usize> = (0..CELLS).collect();
    for x in SymbolTuple::all() {
        let xs = [
            points[usize::from(x.a)],
            points[usize::from(x.b)],
            points[usize::from(x.c)],
            points[usize::from(x.d)],
        ];
        for v in &s.orbit {
            // x' = x - v, entry-wise; skip when it leaves the constellation
            let mut other = [0u8; 4];
            let mut ok = true;
            for i in 0..4 {
                match index_of(xs[i] - v.0[i]) {
                    Some(k) => other[i] = k as u8,
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                let y = SymbolTuple::new(other[0], other[1], other[2], other[3]);
                union(&mut parent, x.index(), y.index());
            }
        }
    }

    let mut part_of = vec![usize::MAX; CELLS];
    let mut parts: Vec<Vec<SymbolTuple>> = Vec::new();
    let mut root_to_part: HashMap<usize, usize> = HashMap::new();
    for (i, slot) in part_of.iter_mut().enumerate() {
        let r = find(&mut parent, i);
        let p = *root_to_part.entry(r).or_insert_with(|| {
            parts.push(Vec::new());
            parts.len() - 1
        });
        *slot = p;
        parts[p].push(SymbolTuple::from_index(i));
    }
    ConstraintPartition { part_of, parts }
}

/// True iff some part contains two tuples agreeing in a coordinate, which
/// would force a repeated label inside a hyperplane.
pub fn constraints_conflict(p: &ConstraintPartition) -> bool {
    p.parts.iter().any(|part| {
        part.iter().enumerate().any(|(i, x)| {
            part[i + 1..].iter().any(|y| x.shares_coordinate(*y))
        })
    })
}

/// Greedy completion of a conflict-free constraint partition into a Latin
/// hyper-cube. Cells are visited in ascending flat order; when an unlabeled
/// cell is reached its whole part receives the smallest label that keeps
/// every hyperplane repeat-free. A fresh label is always feasible, so the
/// procedure terminates with contiguous labels `1..=t`, `t >= 64`.
pub fn complete_map(p: &ConstraintPartition) -> Result<ClusterMap, Error> {
    if constraints_conflict(p) {
        return Err(Error::ConflictingConstraints);
    }
    let mut labels = vec![0u16; CELLS];
    // used[label][pos][value]: label already present in that hyperplane
    let mut used: Vec<[[bool; SIDE]; 4]> = vec![[[false; SIDE]; 4]];
    let mut t = 0u16;
    for i in 0..CELLS {
        if labels[i] != 0 {
            continue;
        }
        let part = &p.parts[p.part_of[i]];
        let mut choice = 0u16;
        'labels: for l in 1..=t {
            let u = &used[usize::from(l)];
            for x in part {
                for pos in 0..4 {
                    if u[pos][usize::from(x.coord(pos))] {
                        continue 'labels;
                    }
                }
            }
            choice = l;
            break;
        }
        if choice == 0 {
            t += 1;
            used.push([[false; SIDE]; 4]);
            choice = t;
        }
        let u = &mut used[usize::from(choice)];
        for x in part {
            labels[x.index()] = choice;
            for pos in 0..4 {
                u[pos][usize::from(x.coord(pos))] = true;
            }
        }
    }
    ClusterMap::from_labels(labels)
}

/// The embedded adaptive-map fixture for the worked two-user-pair example.
pub fn table1_map() -> ClusterMap {
    ClusterMap::from_labels(crate::fixtures::TABLE1_LABELS.to_vec()).expect("fixture is valid")
}

/// The embedded non-adaptive relay map used by the fixed two-use scheme.
pub fn table2_map() -> ClusterMap {
    ClusterMap::from_labels(crate::fixtures::TABLE2_LABELS.to_vec()).expect("fixture is valid")
}

/// One exclusive-law map per removable singular fade subspace.
#[derive(Debug, Clone, PartialEq)]
pub struct Codebook {
    entries: Vec<(DifferenceVector, ClusterMap)>,
}

impl Codebook {
    pub fn from_entries(entries: Vec<(DifferenceVector, ClusterMap)>) -> Self {
        Codebook { entries }
    }

    pub fn entries(&self) -> &[(DifferenceVector, ClusterMap)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, k: usize) -> &(DifferenceVector, ClusterMap) {
        &self.entries[k]
    }
}

/// Builds the full codebook: a completed map for each of the 960 removable
/// subspace classes, in enumeration order. Entries are built in parallel.
pub fn build_codebook() -> Result<Codebook, Error> {
    let removable: Vec<SubspaceClass> = enumerate_singular_subspaces()
        .into_iter()
        .filter(|c| c.removable)
        .collect();
    let entries: Result<Vec<_>, Error> = crate::thread_pool().install(|| {
        removable
            .par_iter()
            .map(|class| {
                let map = complete_map(&build_constraints(class))?;
                Ok((class.canonical, map))
            })
            .collect()
    });
    Ok(Codebook { entries: entries? })
}

const FILE_MAGIC: &str = "PNC4CB 1";

/// Writes the codebook as line-oriented text: a three-line header, then per
/// entry one line with the canonical vector (8 integers in half-unit steps)
/// and one line with the 256 labels.
pub fn store_codebook(cb: &Codebook, path: &Path) -> Result<(), Error> {
    let file = std::fs::File::create(path)?;
    let mut w = BufWriter::new(file);
    writeln!(w, "{FILE_MAGIC}")?;
    writeln!(w, "M 4")?;
    writeln!(w, "count {}", cb.len())?;
    for (v, m) in &cb.entries {
        let flat = v.to_flat();
        let halves: Vec<String> = flat.iter().map(|&x| (2 * i32::from(x)).to_string()).collect();
        writeln!(w, "{}", halves.join(" "))?;
        let labels: Vec<String> = m.labels().iter().map(|l| l.to_string()).collect();
        writeln!(w, "{}", labels.join(" "))?;
    }
    w.flush()?;
    Ok(())
}

pub fn load_codebook(path: &Path) -> Result<Codebook, Error> {
    let file = std::fs::File::open(path)?;
    let mut lines = BufReader::new(file).lines();
    let mut next = |what: &str| -> Result<String, Error> {
        lines
            .next()
            .ok_or_else(|| Error::Format(format!("unexpected end of file, expected {what}")))?
            .map_err(Error::Io)
    };
    if next("magic header")? != FILE_MAGIC {
        return Err(Error::Format("bad magic header".into()));
    }
    if next("side header")? != "M 4" {
        return Err(Error::Format("unsupported side".into()));
    }
    let count_line = next("count header")?;
    let count: usize = count_line
        .strip_prefix("count ")
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Format(format!("bad count line: {count_line}")))?;
    let mut entries = Vec::with_capacity(count);
    for _ in 0..count {
        let vline = next("canonical vector")?;
        let halves: Vec<i32> = vline
            .split_whitespace()
            .map(|s| s.parse().map_err(|_| Error::Format(format!("bad vector line: {vline}"))))
            .collect::<Result<_, _>>()?;
        if halves.len() != 8 || halves.iter().any(|h| h % 2 != 0) {
            return Err(Error::Format(format!("bad vector line: {vline}")));
        }
        let mut flat = [0i8; 8];
        for (i, h) in halves.iter().enumerate() {
            flat[i] = (h / 2) as i8;
        }
        let lline = next("label row")?;
        let labels: Vec<u16> = lline
            .split_whitespace()
            .map(|s| s.parse().map_err(|_| Error::Format("bad label row".into())))
            .collect::<Result<_, _>>()?;
        entries.push((DifferenceVector::from_flat(&flat), ClusterMap::from_labels(labels)?));
    }
    if lines.next().is_some() {
        return Err(Error::Format("trailing data after last entry".into()));
    }
    Ok(Codebook { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fadespace::orbit;

    fn dv(flat: [i32; 8]) -> DifferenceVector {
        DifferenceVector([
            GaussianInt::new(flat[0], flat[1]),
            GaussianInt::new(flat[2], flat[3]),
            GaussianInt::new(flat[4], flat[5]),
            GaussianInt::new(flat[6], flat[7]),
        ])
    }

    fn class_of(v: DifferenceVector) -> SubspaceClass {
        let orb = orbit(&v).unwrap();
        let canonical = crate::fadespace::canonical_representative(&orb);
        let mut c = SubspaceClass {
            canonical,
            orbit: orb,
            case_id: v.support().len() as u8,
            subcase_id: 0,
            removable: false,
        };
        c.removable = c.case_id == 4;
        c
    }

    #[test]
    fn tuple_index_round_trip() {
        for i in 0..CELLS {
            assert_eq!(SymbolTuple::from_index(i).index(), i);
        }
        assert_eq!(SymbolTuple::new(1, 2, 3, 0).index(), 64 + 32 + 12);
    }

    #[test]
    fn fixture_maps_are_latin() {
        assert!(satisfies_exclusive_law(&table1_map()));
        assert!(satisfies_exclusive_law(&table2_map()));
        assert_eq!(table1_map().label_count(), 64);
        assert_eq!(table2_map().label_count(), 64);
    }

    #[test]
    fn table2_fixture_cells() {
        let m = table2_map();
        assert_eq!(m.label(SymbolTuple::new(0, 0, 0, 0)), 1);
        assert_eq!(m.label(SymbolTuple::new(3, 0, 3, 3)), 64);
    }

    #[test]
    fn constant_map_fails_exclusive_law() {
        let m = ClusterMap::from_labels(vec![1; CELLS]).unwrap();
        assert!(!satisfies_exclusive_law(&m));
    }

    #[test]
    fn swapped_cells_break_latin() {
        let mut labels = table2_map().labels().to_vec();
        labels.swap(0, 1);
        let m = ClusterMap::from_labels(labels).unwrap();
        assert!(!satisfies_exclusive_law(&m));
    }

    #[test]
    fn from_labels_validation() {
        assert!(matches!(
            ClusterMap::from_labels(vec![1; 10]),
            Err(Error::Format(_))
        ));
        assert!(matches!(
            ClusterMap::from_labels(vec![0; CELLS]),
            Err(Error::Format(_))
        ));
        // label 2 missing
        let mut labels = vec![1u16; CELLS];
        labels[0] = 3;
        assert!(matches!(
            ClusterMap::from_labels(labels),
            Err(Error::Format(_))
        ));
    }

    #[test]
    fn example_constraint_pair_is_merged() {
        let class = class_of(dv([-1, -1, 1, 1, 1, 1, 1, -1]));
        let p = build_constraints(&class);
        // symbols (-1, 1, 1, 1) and (j, -j, -j, j)
        let x = SymbolTuple::new(2, 0, 0, 0);
        let y = SymbolTuple::new(1, 3, 3, 1);
        assert!(p.same_part(x, y));
        assert_eq!(p.parts().iter().map(Vec::len).sum::<usize>(), CELLS);
    }

    #[test]
    fn case1_constraint_merges_whole_lines() {
        let class = class_of(dv([-2, 0, 0, 0, 0, 0, 0, 0]));
        let p = build_constraints(&class);
        for b in 0..4u8 {
            for c in 0..4u8 {
                for d in 0..4u8 {
                    // symbols 1 and -1 at user A: indices 0 and 2
                    assert!(p.same_part(SymbolTuple::new(0, b, c, d), SymbolTuple::new(2, b, c, d)));
                }
            }
        }
        assert!(constraints_conflict(&p));
    }

    #[test]
    fn case4_constraints_do_not_conflict() {
        let class = class_of(dv([1, 1, 1, 1, 1, 1, 1, 1]));
        let p = build_constraints(&class);
        assert!(!constraints_conflict(&p));
        // Lemma-5 converse: all coordinates pairwise distinct inside a part
        for part in p.parts() {
            for (i, x) in part.iter().enumerate() {
                for y in &part[i + 1..] {
                    for pos in 0..4 {
                        assert_ne!(x.coord(pos), y.coord(pos));
                    }
                }
            }
        }
    }

    #[test]
    fn singleton_partition_completes_with_64_labels() {
        let p = ConstraintPartition::singletons();
        assert!(!constraints_conflict(&p));
        let m = complete_map(&p).unwrap();
        assert!(satisfies_exclusive_law(&m));
        assert_eq!(m.label_count(), 64);
    }

    #[test]
    fn conflicting_partition_is_rejected() {
        let class = class_of(dv([-2, 0, 0, 0, 0, 0, 0, 0]));
        let p = build_constraints(&class);
        assert!(matches!(complete_map(&p), Err(Error::ConflictingConstraints)));
    }

    #[test]
    fn example_partition_completes_monochromatically() {
        let class = class_of(dv([-1, -1, 1, 1, 1, 1, 1, -1]));
        let p = build_constraints(&class);
        let m = complete_map(&p).unwrap();
        assert!(satisfies_exclusive_law(&m));
        assert!(m.label_count() >= 64);
        for part in p.parts() {
            let l = m.label(part[0]);
            assert!(part.iter().all(|x| m.label(*x) == l));
        }
        // determinism
        assert_eq!(complete_map(&p).unwrap(), m);
    }

    #[test]
    fn table1_is_monochromatic_on_example_partition() {
        let class = class_of(dv([-1, -1, 1, 1, 1, 1, 1, -1]));
        let p = build_constraints(&class);
        let m = table1_map();
        for part in p.parts() {
            let l = m.label(part[0]);
            assert!(part.iter().all(|x| m.label(*x) == l));
        }
    }

    #[test]
    fn codebook_round_trip() {
        // small synthetic codebook: two entries built from real classes
        let c1 = class_of(dv([1, 1, 1, 1, 1, 1, 1, 1]));
        let c2 = class_of(dv([1, 1, 1, 1, 1, 1, 2, 0]));
        let cb = Codebook {
            entries: vec![
                (c1.canonical, complete_map(&build_constraints(&c1)).unwrap()),
                (c2.canonical, complete_map(&build_constraints(&c2)).unwrap()),
            ],
        };
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cb.txt");
        store_codebook(&cb, &path).unwrap();
        let loaded = load_codebook(&path).unwrap();
        assert_eq!(loaded, cb);
        // byte-identical on re-store
        let path2 = dir.path().join("cb2.txt");
        store_codebook(&loaded, &path2).unwrap();
        assert_eq!(std::fs::read(&path).unwrap(), std::fs::read(&path2).unwrap());
    }

    #[test]
    fn load_rejects_malformed_files() {
        let dir = tempfile::tempdir().unwrap();
        let bad = dir.path().join("bad.txt");
        std::fs::write(&bad, "not a codebook\n").unwrap();
        assert!(matches!(load_codebook(&bad), Err(Error::Format(_))));
        let truncated = dir.path().join("trunc.txt");
        std::fs::write(&truncated, "PNC4CB 1\nM 4\ncount 1\n").unwrap();
        assert!(matches!(load_codebook(&truncated), Err(Error::Format(_))));
        assert!(matches!(
            load_codebook(&dir.path().join("missing.txt")),
            Err(Error::Io(_))
        ));
    }
}
