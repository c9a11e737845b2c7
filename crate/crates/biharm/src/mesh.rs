//! Structured triangular meshes of the unit square and the L-shaped domain,
//! uniform refinement with parent/child nesting, and boundary labeling.
//!
//! Conventions:
//! - cells are counter-clockwise vertex triples;
//! - edges are stored with the lower vertex index first, and the global edge
//!   normal is the 90-degree clockwise rotation of the low-to-high tangent;
//! - local edge i of a cell is the edge opposite local vertex i, traversed
//!   from vertex (i+1)%3 to vertex (i+2)%3 (the counter-clockwise direction);
//! - `cell_edges` records the edge index and +1/-1 depending on whether the
//!   global edge direction agrees with the local traversal.
//!
//! The square mesh splits every grid cell by the diagonal from its top-left
//! to its bottom-right corner; the L-shape mesh splits every retained grid
//! cell into four triangles by both diagonals.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::Arc;

use thiserror::Error;

use crate::elements::FESpace;

#[derive(Debug, Error)]
pub enum MeshError {
    #[error("cells-per-side must be at least {min}, got {got}")]
    TooCoarse { min: usize, got: usize },
    #[error("L-shape mesh requires an even cells-per-side, got {0}")]
    OddLShape(usize),
    #[error("boundary segment `{0}` is not part of this domain")]
    UnknownSegment(String),
    #[error("boundary segment `{0}` has no label in the partition")]
    UnlabeledSegment(String),
}

/// Boundary-condition class attached to a boundary segment.
///
/// G0: value and Laplacian prescribed; G1: value and normal derivative
/// (clamped); G2: flux of the Laplacian and the Laplacian; G3: flux of the
/// Laplacian and the normal derivative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gamma {
    G0,
    G1,
    G2,
    G3,
}

impl Gamma {
    pub fn parse(s: &str) -> Option<Gamma> {
        match s.trim().to_ascii_lowercase().as_str() {
            "gamma0" | "g0" | "0" => Some(Gamma::G0),
            "gamma1" | "g1" | "1" => Some(Gamma::G1),
            "gamma2" | "g2" | "2" => Some(Gamma::G2),
            "gamma3" | "g3" | "3" => Some(Gamma::G3),
            _ => None,
        }
    }
}

impl std::fmt::Display for Gamma {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Gamma::G0 => "gamma0",
            Gamma::G1 => "gamma1",
            Gamma::G2 => "gamma2",
            Gamma::G3 => "gamma3",
        };
        write!(f, "{s}")
    }
}

/// Assignment of named boundary segments to Gamma classes.
///
/// Square segments are N, S, E, W. The L-shape has six sides S0..S5, named
/// by their start vertex walking the boundary counter-clockwise from the
/// origin: S0 is y=0, S1 is x=1, S2 is the inner horizontal side y=1/2,
/// S3 is the inner vertical side x=1/2, S4 is y=1, S5 is x=0.
#[derive(Clone, Debug, Default)]
pub struct GammaPartition {
    map: BTreeMap<String, Gamma>,
}

impl GammaPartition {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(mut self, segment: &str, class: Gamma) -> Self {
        self.map.insert(segment.to_string(), class);
        self
    }

    /// Label every segment of the domain with one class.
    pub fn uniform(domain: Domain, class: Gamma) -> Self {
        let mut part = Self::new();
        for name in domain.segment_names() {
            part.map.insert(name.to_string(), class);
        }
        part
    }

    pub fn get(&self, segment: &str) -> Option<Gamma> {
        self.map.get(segment).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, Gamma)> {
        self.map.iter().map(|(k, &v)| (k.as_str(), v))
    }

    /// True if any segment carries the class.
    pub fn has_class(&self, class: Gamma) -> bool {
        self.map.values().any(|&c| c == class)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    Square,
    LShape,
}

impl Domain {
    pub fn segment_names(&self) -> &'static [&'static str] {
        match self {
            Domain::Square => &["S", "E", "N", "W"],
            Domain::LShape => &["S0", "S1", "S2", "S3", "S4", "S5"],
        }
    }
}

/// Hierarchical simplicial mesh with labeled boundary segments.
#[derive(Clone, Debug)]
pub struct Mesh2D {
    pub domain: Domain,
    /// Cells per unit side; the representative mesh size is h = 1/n.
    pub n: usize,
    /// Refinement level, 0 for a directly built mesh.
    pub level: usize,
    pub vertices: Vec<[f64; 2]>,
    pub cells: Vec<[usize; 3]>,
    /// Edges as (low, high) vertex pairs.
    pub edges: Vec<[usize; 2]>,
    /// Per cell: (edge index, +1/-1) for local edges 0, 1, 2.
    pub cell_edges: Vec<[(usize, i8); 3]>,
    /// Cells adjacent to each edge; boundary edges have one.
    pub edge_cells: Vec<(usize, Option<usize>)>,
    /// Segment id (index into `Domain::segment_names`) per boundary edge.
    pub edge_segment: Vec<Option<usize>>,
    /// Gamma class per boundary edge once labeled.
    pub edge_label: Vec<Option<Gamma>>,
    /// For refined meshes: children of each coarse cell.
    pub parent_children: Option<Vec<[usize; 4]>>,
    pub vertex_cells: Vec<Vec<usize>>,
    pub vertex_edges: Vec<Vec<usize>>,
}

impl Mesh2D {
    pub fn h(&self) -> f64 {
        1.0 / self.n as f64
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn is_boundary_edge(&self, e: usize) -> bool {
        self.edge_cells[e].1.is_none()
    }

    pub fn cell_vertices(&self, c: usize) -> [[f64; 2]; 3] {
        let [a, b, cc] = self.cells[c];
        [self.vertices[a], self.vertices[b], self.vertices[cc]]
    }

    pub fn signed_area(&self, c: usize) -> f64 {
        let [p0, p1, p2] = self.cell_vertices(c);
        0.5 * ((p1[0] - p0[0]) * (p2[1] - p0[1]) - (p1[1] - p0[1]) * (p2[0] - p0[0]))
    }

    /// Unit tangent of the edge in its canonical (low to high) direction.
    pub fn edge_tangent(&self, e: usize) -> [f64; 2] {
        let [a, b] = self.edges[e];
        let d = [
            self.vertices[b][0] - self.vertices[a][0],
            self.vertices[b][1] - self.vertices[a][1],
        ];
        let len = (d[0] * d[0] + d[1] * d[1]).sqrt();
        [d[0] / len, d[1] / len]
    }

    /// Canonical edge normal: the tangent rotated 90 degrees clockwise.
    pub fn edge_normal(&self, e: usize) -> [f64; 2] {
        let t = self.edge_tangent(e);
        [t[1], -t[0]]
    }

    pub fn edge_length(&self, e: usize) -> f64 {
        let [a, b] = self.edges[e];
        let d = [
            self.vertices[b][0] - self.vertices[a][0],
            self.vertices[b][1] - self.vertices[a][1],
        ];
        (d[0] * d[0] + d[1] * d[1]).sqrt()
    }

    /// Sign relating the canonical normal of a boundary edge to the outward
    /// normal: outward = sign * canonical.
    pub fn boundary_outward_sign(&self, e: usize) -> f64 {
        debug_assert!(self.is_boundary_edge(e));
        let cell = self.edge_cells[e].0;
        let local = self.cell_edges[cell]
            .iter()
            .position(|&(ei, _)| ei == e)
            .expect("edge belongs to its cell");
        // the local traversal is counter-clockwise, whose clockwise rotation
        // is outward; the canonical normal agrees iff the directions agree
        self.cell_edges[cell][local].1 as f64
    }

    /// Assign the partition's Gamma classes to every boundary edge.
    pub fn label_boundary(&mut self, part: &GammaPartition) -> Result<(), MeshError> {
        let names = self.domain.segment_names();
        for (seg, _) in part.iter() {
            if !names.contains(&seg) {
                return Err(MeshError::UnknownSegment(seg.to_string()));
            }
        }
        let mut labels = vec![None; self.edges.len()];
        for e in 0..self.edges.len() {
            if let Some(seg) = self.edge_segment[e] {
                match part.get(names[seg]) {
                    Some(class) => labels[e] = Some(class),
                    None => return Err(MeshError::UnlabeledSegment(names[seg].to_string())),
                }
            }
        }
        self.edge_label = labels;
        Ok(())
    }

    /// Boundary edges carrying any of the given classes.
    pub fn edges_with_class(&self, classes: &[Gamma]) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&e| matches!(self.edge_label[e], Some(c) if classes.contains(&c)))
            .collect()
    }

    /// Plain-text dump: VERTICES, CELLS, BOUNDARY sections.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let names = self.domain.segment_names();
        writeln!(out, "VERTICES {}", self.num_vertices()).unwrap();
        for (i, v) in self.vertices.iter().enumerate() {
            writeln!(out, "{} {:.17e} {:.17e}", i, v[0], v[1]).unwrap();
        }
        writeln!(out, "CELLS {}", self.num_cells()).unwrap();
        for c in &self.cells {
            writeln!(out, "{} {} {}", c[0], c[1], c[2]).unwrap();
        }
        let boundary: Vec<usize> = (0..self.num_edges())
            .filter(|&e| self.is_boundary_edge(e))
            .collect();
        writeln!(out, "BOUNDARY {}", boundary.len()).unwrap();
        for e in boundary {
            let label = match self.edge_label[e] {
                Some(g) => g.to_string(),
                None => match self.edge_segment[e] {
                    Some(s) => names[s].to_string(),
                    None => "-".to_string(),
                },
            };
            writeln!(out, "{} {}", e, label).unwrap();
        }
        out
    }
}

/// Uniform right-triangle mesh of the unit square with n cells per side.
///
/// Each grid square is split by the diagonal from its top-left to its
/// bottom-right corner, giving 2n^2 cells, (n+1)^2 vertices and 3n^2 + 2n
/// edges.
pub fn build_unit_square_right(n: usize) -> Result<Mesh2D, MeshError> {
    if n < 1 {
        return Err(MeshError::TooCoarse { min: 1, got: n });
    }
    let h = 1.0 / n as f64;
    let vid = |i: usize, j: usize| j * (n + 1) + i;
    let mut vertices = Vec::with_capacity((n + 1) * (n + 1));
    for j in 0..=n {
        for i in 0..=n {
            vertices.push([i as f64 * h, j as f64 * h]);
        }
    }
    let mut cells = Vec::with_capacity(2 * n * n);
    for j in 0..n {
        for i in 0..n {
            let a = vid(i, j);
            let b = vid(i + 1, j);
            let c = vid(i + 1, j + 1);
            let d = vid(i, j + 1);
            // diagonal d-b (top-left to bottom-right)
            cells.push([a, b, d]);
            cells.push([b, c, d]);
        }
    }
    Ok(finish_mesh(Domain::Square, n, 0, vertices, cells, None))
}

/// Uniform crossed mesh of the L-shaped domain (unit square minus the open
/// quadrant [1/2,1] x [1/2,1]); n cells per unit side, n even.
///
/// Every retained grid square is split into four triangles by both
/// diagonals, adding one center vertex per square.
pub fn build_lshape_crossed(n: usize) -> Result<Mesh2D, MeshError> {
    if n < 2 {
        return Err(MeshError::TooCoarse { min: 2, got: n });
    }
    if n % 2 != 0 {
        return Err(MeshError::OddLShape(n));
    }
    let h = 1.0 / n as f64;
    let keep_vertex = |i: usize, j: usize| i <= n / 2 || j <= n / 2;
    let keep_square = |i: usize, j: usize| i < n / 2 || j < n / 2;

    let mut vertices = Vec::new();
    let mut grid_id = HashMap::new();
    for j in 0..=n {
        for i in 0..=n {
            if keep_vertex(i, j) {
                grid_id.insert((i, j), vertices.len());
                vertices.push([i as f64 * h, j as f64 * h]);
            }
        }
    }
    let mut cells = Vec::new();
    for j in 0..n {
        for i in 0..n {
            if !keep_square(i, j) {
                continue;
            }
            let bl = grid_id[&(i, j)];
            let br = grid_id[&(i + 1, j)];
            let tr = grid_id[&(i + 1, j + 1)];
            let tl = grid_id[&(i, j + 1)];
            let center = vertices.len();
            vertices.push([(i as f64 + 0.5) * h, (j as f64 + 0.5) * h]);
            cells.push([bl, br, center]);
            cells.push([br, tr, center]);
            cells.push([tr, tl, center]);
            cells.push([tl, bl, center]);
        }
    }
    Ok(finish_mesh(Domain::LShape, n, 0, vertices, cells, None))
}

/// Split every triangle into four congruent children through the edge
/// midpoints. Coarse vertices keep their indices; the nesting map and
/// inherited boundary labels are populated on the result.
pub fn refine_uniform(coarse: &Mesh2D) -> Mesh2D {
    let nv = coarse.num_vertices();
    let mut vertices = coarse.vertices.clone();
    for e in 0..coarse.num_edges() {
        let [a, b] = coarse.edges[e];
        vertices.push([
            0.5 * (coarse.vertices[a][0] + coarse.vertices[b][0]),
            0.5 * (coarse.vertices[a][1] + coarse.vertices[b][1]),
        ]);
    }
    let mid = |edge_map: &HashMap<(usize, usize), usize>, a: usize, b: usize| {
        nv + edge_map[&(a.min(b), a.max(b))]
    };
    let mut edge_map = HashMap::new();
    for (e, &[a, b]) in coarse.edges.iter().enumerate() {
        edge_map.insert((a, b), e);
    }
    let mut cells = Vec::with_capacity(4 * coarse.num_cells());
    let mut children = Vec::with_capacity(coarse.num_cells());
    for &[v0, v1, v2] in &coarse.cells {
        let m01 = mid(&edge_map, v0, v1);
        let m12 = mid(&edge_map, v1, v2);
        let m20 = mid(&edge_map, v2, v0);
        let base = cells.len();
        cells.push([v0, m01, m20]);
        cells.push([m01, v1, m12]);
        cells.push([m20, m12, v2]);
        cells.push([m01, m12, m20]);
        children.push([base, base + 1, base + 2, base + 3]);
    }
    let mut fine = finish_mesh(
        coarse.domain,
        coarse.n * 2,
        coarse.level + 1,
        vertices,
        cells,
        Some(children),
    );
    // a fine boundary edge is half of a coarse boundary edge; its midpoint
    // vertex identifies the parent edge
    for e in 0..fine.num_edges() {
        if !fine.is_boundary_edge(e) {
            continue;
        }
        let [a, b] = fine.edges[e];
        let parent = if a >= nv { a - nv } else { b - nv };
        fine.edge_label[e] = coarse.edge_label[parent];
        fine.edge_segment[e] = coarse.edge_segment[parent];
    }
    fine
}

fn finish_mesh(
    domain: Domain,
    n: usize,
    level: usize,
    vertices: Vec<[f64; 2]>,
    cells: Vec<[usize; 3]>,
    parent_children: Option<Vec<[usize; 4]>>,
) -> Mesh2D {
    let mut edge_ids: HashMap<(usize, usize), usize> = HashMap::new();
    let mut edges = Vec::new();
    let mut cell_edges = vec![[(0usize, 0i8); 3]; cells.len()];
    let mut edge_cells: Vec<(usize, Option<usize>)> = Vec::new();
    for (c, &[v0, v1, v2]) in cells.iter().enumerate() {
        let verts = [v0, v1, v2];
        for li in 0..3 {
            let a = verts[(li + 1) % 3];
            let b = verts[(li + 2) % 3];
            let key = (a.min(b), a.max(b));
            let e = *edge_ids.entry(key).or_insert_with(|| {
                edges.push([key.0, key.1]);
                edge_cells.push((usize::MAX, None));
                edges.len() - 1
            });
            let sign: i8 = if a < b { 1 } else { -1 };
            cell_edges[c][li] = (e, sign);
            if edge_cells[e].0 == usize::MAX {
                edge_cells[e].0 = c;
            } else {
                debug_assert!(edge_cells[e].1.is_none(), "edge shared by >2 cells");
                edge_cells[e].1 = Some(c);
            }
        }
    }
    let edge_segment = (0..edges.len())
        .map(|e| {
            if edge_cells[e].1.is_some() {
                return None;
            }
            let [a, b] = edges[e];
            let m = [
                0.5 * (vertices[a][0] + vertices[b][0]),
                0.5 * (vertices[a][1] + vertices[b][1]),
            ];
            Some(classify_segment(domain, m))
        })
        .collect();
    let mut vertex_cells = vec![Vec::new(); vertices.len()];
    for (c, cell) in cells.iter().enumerate() {
        for &v in cell {
            vertex_cells[v].push(c);
        }
    }
    let mut vertex_edges = vec![Vec::new(); vertices.len()];
    for (e, &[a, b]) in edges.iter().enumerate() {
        vertex_edges[a].push(e);
        vertex_edges[b].push(e);
    }
    Mesh2D {
        domain,
        n,
        level,
        vertices,
        cells,
        edges,
        cell_edges,
        edge_cells,
        edge_segment,
        edge_label: vec![None; edge_ids.len()],
        parent_children,
        vertex_cells,
        vertex_edges,
    }
}

fn classify_segment(domain: Domain, m: [f64; 2]) -> usize {
    let eps = 1e-12;
    match domain {
        // S, E, N, W
        Domain::Square => {
            if m[1].abs() < eps {
                0
            } else if (m[0] - 1.0).abs() < eps {
                1
            } else if (m[1] - 1.0).abs() < eps {
                2
            } else {
                debug_assert!(m[0].abs() < eps);
                3
            }
        }
        // S0..S5 counter-clockwise from the origin
        Domain::LShape => {
            if m[1].abs() < eps {
                0
            } else if (m[0] - 1.0).abs() < eps {
                1
            } else if (m[1] - 0.5).abs() < eps && m[0] > 0.5 {
                2
            } else if (m[0] - 0.5).abs() < eps && m[1] > 0.5 {
                3
            } else if (m[1] - 1.0).abs() < eps {
                4
            } else {
                debug_assert!(m[0].abs() < eps);
                5
            }
        }
    }
}

/// Star patch: the unconstrained system degrees of freedom living on the
/// cells and edges around one vertex, across all three fields.
#[derive(Clone, Debug)]
pub struct StarPatch {
    pub vertex: usize,
    /// Global indices into the assembled [u; v; alpha] system vector.
    pub dofs: Vec<usize>,
}

/// Build one star patch per mesh vertex from the three field spaces
/// (u, v, alpha in system order); empty patches are dropped.
pub fn star_patches(mesh: &Mesh2D, spaces: [&FESpace; 3]) -> Vec<StarPatch> {
    let offsets = [0, spaces[0].ndof, spaces[0].ndof + spaces[1].ndof];
    let mut patches = Vec::with_capacity(mesh.num_vertices());
    for v in 0..mesh.num_vertices() {
        let mut dofs = Vec::new();
        for (field, space) in spaces.iter().enumerate() {
            let off = offsets[field];
            for &e in &mesh.vertex_edges[v] {
                for d in space.edge_dofs(e) {
                    if !space.is_constrained(d) {
                        dofs.push(off + d);
                    }
                }
            }
            for &c in &mesh.vertex_cells[v] {
                for d in space.interior_dofs(c) {
                    if !space.is_constrained(d) {
                        dofs.push(off + d);
                    }
                }
            }
        }
        if !dofs.is_empty() {
            patches.push(StarPatch { vertex: v, dofs });
        }
    }
    patches
}

/// Convenience: build, optionally refine to level, and label.
pub fn build_domain(
    domain: Domain,
    n: usize,
    part: &GammaPartition,
) -> Result<Arc<Mesh2D>, MeshError> {
    let mut mesh = match domain {
        Domain::Square => build_unit_square_right(n)?,
        Domain::LShape => build_lshape_crossed(n)?,
    };
    mesh.label_boundary(part)?;
    Ok(Arc::new(mesh))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn euler_ok(m: &Mesh2D) -> bool {
        m.num_vertices() + m.num_cells() == m.num_edges() + 1
    }

    fn all_positive_area(m: &Mesh2D) -> bool {
        (0..m.num_cells()).all(|c| m.signed_area(c) > 0.0)
    }

    fn incidence_ok(m: &Mesh2D) -> bool {
        (0..m.num_edges()).all(|e| {
            let (c0, c1) = m.edge_cells[e];
            c0 != usize::MAX && (c1.is_some() || m.edge_segment[e].is_some())
        })
    }

    #[test]
    fn square_n1_counts() {
        let m = build_unit_square_right(1).unwrap();
        assert_eq!(m.num_cells(), 2);
        assert_eq!(m.num_vertices(), 4);
        assert_eq!(m.num_edges(), 5);
        assert!(euler_ok(&m) && all_positive_area(&m) && incidence_ok(&m));
    }

    #[test]
    fn square_n4_counts() {
        let m = build_unit_square_right(4).unwrap();
        assert_eq!(m.num_cells(), 32);
        assert_eq!(m.num_vertices(), 25);
        assert_eq!(m.num_edges(), 56);
        assert!(euler_ok(&m) && all_positive_area(&m));
    }

    #[test]
    fn square_n64_edges() {
        let m = build_unit_square_right(64).unwrap();
        assert_eq!(m.num_edges(), 12_416);
        assert!(euler_ok(&m));
    }

    #[test]
    fn square_rejects_zero() {
        assert!(build_unit_square_right(0).is_err());
    }

    #[test]
    fn lshape_counts() {
        let m = build_lshape_crossed(2).unwrap();
        assert_eq!(m.num_cells(), 12);
        assert!(euler_ok(&m) && all_positive_area(&m) && incidence_ok(&m));
        let m = build_lshape_crossed(4).unwrap();
        assert_eq!(m.num_cells(), 48);
        assert!(euler_ok(&m) && all_positive_area(&m));
    }

    #[test]
    fn lshape_rejects_odd() {
        assert!(build_lshape_crossed(3).is_err());
        assert!(build_lshape_crossed(1).is_err());
    }

    #[test]
    fn refine_matches_direct_build() {
        let coarse = build_unit_square_right(4).unwrap();
        let fine = refine_uniform(&coarse);
        let direct = build_unit_square_right(8).unwrap();
        assert_eq!(fine.num_cells(), 128);
        assert_eq!(fine.num_cells(), direct.num_cells());
        assert_eq!(fine.num_vertices(), direct.num_vertices());
        assert_eq!(fine.num_edges(), direct.num_edges());
        // same vertex sets and same cell sets up to relabeling
        let key = |p: [f64; 2]| ((p[0] * 1e9).round() as i64, (p[1] * 1e9).round() as i64);
        let mut va: Vec<_> = fine.vertices.iter().map(|&p| key(p)).collect();
        let mut vb: Vec<_> = direct.vertices.iter().map(|&p| key(p)).collect();
        va.sort_unstable();
        vb.sort_unstable();
        assert_eq!(va, vb);
        let cell_key = |m: &Mesh2D, c: usize| {
            let mut k: Vec<_> = m.cell_vertices(c).iter().map(|&p| key(p)).collect();
            k.sort_unstable();
            k
        };
        let mut ca: Vec<_> = (0..fine.num_cells()).map(|c| cell_key(&fine, c)).collect();
        let mut cb: Vec<_> = (0..direct.num_cells())
            .map(|c| cell_key(&direct, c))
            .collect();
        ca.sort();
        cb.sort();
        assert_eq!(ca, cb);
    }

    #[test]
    fn refine_nests_vertices_and_cells() {
        let coarse = build_lshape_crossed(4).unwrap();
        let fine = refine_uniform(&coarse);
        for v in 0..coarse.num_vertices() {
            assert_eq!(coarse.vertices[v], fine.vertices[v]);
        }
        let children = fine.parent_children.as_ref().unwrap();
        for c in 0..coarse.num_cells() {
            let area: f64 = children[c].iter().map(|&f| fine.signed_area(f)).sum();
            assert!((area - coarse.signed_area(c)).abs() < 1e-14);
        }
        assert!(euler_ok(&fine) && all_positive_area(&fine));
    }

    #[test]
    fn labels_square_gamma0_ew_gamma3_ns() {
        let mut m = build_unit_square_right(8).unwrap();
        let part = GammaPartition::new()
            .set("E", Gamma::G0)
            .set("W", Gamma::G0)
            .set("N", Gamma::G3)
            .set("S", Gamma::G3);
        m.label_boundary(&part).unwrap();
        let g0 = m.edges_with_class(&[Gamma::G0]);
        assert_eq!(g0.len(), 2 * 8);
        for &e in &g0 {
            let [a, b] = m.edges[e];
            for v in [a, b] {
                let x = m.vertices[v][0];
                assert!(x.abs() < 1e-12 || (x - 1.0).abs() < 1e-12);
            }
        }
        assert_eq!(m.edges_with_class(&[Gamma::G3]).len(), 2 * 8);
    }

    #[test]
    fn labels_uniform() {
        let mut m = build_unit_square_right(6).unwrap();
        m.label_boundary(&GammaPartition::uniform(Domain::Square, Gamma::G1))
            .unwrap();
        assert_eq!(m.edges_with_class(&[Gamma::G1]).len(), 4 * 6);

        let mut l = build_lshape_crossed(4).unwrap();
        l.label_boundary(&GammaPartition::uniform(Domain::LShape, Gamma::G0))
            .unwrap();
        let nb = (0..l.num_edges()).filter(|&e| l.is_boundary_edge(e)).count();
        assert_eq!(l.edges_with_class(&[Gamma::G0]).len(), nb);
        // interior edges carry no label
        for e in 0..l.num_edges() {
            if !l.is_boundary_edge(e) {
                assert!(l.edge_label[e].is_none());
            }
        }
    }

    #[test]
    fn label_errors() {
        let mut m = build_unit_square_right(4).unwrap();
        let incomplete = GammaPartition::new().set("N", Gamma::G0);
        assert!(matches!(
            m.label_boundary(&incomplete),
            Err(MeshError::UnlabeledSegment(_))
        ));
        let bogus = GammaPartition::uniform(Domain::Square, Gamma::G0).set("S7", Gamma::G1);
        assert!(matches!(
            m.label_boundary(&bogus),
            Err(MeshError::UnknownSegment(_))
        ));
    }

    #[test]
    fn refinement_inherits_labels() {
        let mut m = build_unit_square_right(4).unwrap();
        m.label_boundary(
            &GammaPartition::new()
                .set("E", Gamma::G0)
                .set("W", Gamma::G0)
                .set("N", Gamma::G3)
                .set("S", Gamma::G2),
        )
        .unwrap();
        let f = refine_uniform(&m);
        assert_eq!(f.edges_with_class(&[Gamma::G0]).len(), 2 * 8);
        assert_eq!(f.edges_with_class(&[Gamma::G2]).len(), 8);
        assert_eq!(f.edges_with_class(&[Gamma::G3]).len(), 8);
    }

    #[test]
    fn boundary_outward_sign_points_outward() {
        let m = build_unit_square_right(4).unwrap();
        for e in 0..m.num_edges() {
            if !m.is_boundary_edge(e) {
                continue;
            }
            let s = m.boundary_outward_sign(e);
            let nrm = m.edge_normal(e);
            let out = [s * nrm[0], s * nrm[1]];
            let [a, b] = m.edges[e];
            let mid = [
                0.5 * (m.vertices[a][0] + m.vertices[b][0]),
                0.5 * (m.vertices[a][1] + m.vertices[b][1]),
            ];
            let probe = [mid[0] + 1e-6 * out[0], mid[1] + 1e-6 * out[1]];
            let inside = probe[0] > 0.0 && probe[0] < 1.0 && probe[1] > 0.0 && probe[1] < 1.0;
            assert!(!inside, "edge {e} outward normal points inside");
        }
    }

    #[test]
    fn dump_roundtrips_counts() {
        let mut m = build_unit_square_right(2).unwrap();
        m.label_boundary(&GammaPartition::uniform(Domain::Square, Gamma::G0))
            .unwrap();
        let text = m.dump();
        assert!(text.contains("VERTICES 9"));
        assert!(text.contains("CELLS 8"));
        assert!(text.contains("BOUNDARY 8"));
    }
}
