//! Skeleton computation: the orbit decomposition of tetrahedron edges and
//! vertices under the face gluings, together with vertex link analysis,
//! global orientability and boundary structure.
//!
//! Edge classes carry an orientation bit per slot so that an edge identified
//! with itself in reverse is detected as invalid.  Vertex links are built as
//! honest cell complexes from the corner triangles of the tetrahedra: for the
//! link of a vertex class we count cells to obtain its Euler characteristic,
//! number of boundary circles (punctures) and orientability.

use super::Triangulation;
use crate::perm::{edge_index, Perm4, EDGE_ENDS};

/// Classification of a vertex link.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LinkKind {
    Sphere,
    Disc,
    Torus,
    KleinBottle,
    Other,
}

#[derive(Clone, Debug)]
pub struct EdgeClass {
    /// Number of (tetrahedron, edge slot) embeddings.
    pub degree: usize,
    /// False when some gluing path identifies the edge with itself in reverse.
    pub valid: bool,
    pub distinct_tets: usize,
    /// True when no side of the edge lies on a boundary triangle.
    pub internal: bool,
    /// All (tetrahedron, edge slot) members, sorted.
    pub slots: Vec<(usize, u8)>,
}

#[derive(Clone, Debug)]
pub struct VertexClass {
    /// Euler characteristic of the link surface (boundary included).
    pub link_euler: i64,
    /// Number of boundary circles of the link surface.
    pub punctures: usize,
    pub link_orientable: bool,
    pub kind: LinkKind,
    /// All (tetrahedron, vertex) members, sorted.
    pub slots: Vec<(usize, u8)>,
}

#[derive(Clone, Debug)]
pub struct BoundaryComponent {
    pub triangles: usize,
    pub euler: i64,
    pub orientable: bool,
    /// Boundary faces (tetrahedron, face), sorted.
    pub faces: Vec<(usize, u8)>,
}

impl BoundaryComponent {
    pub fn is_torus(&self) -> bool {
        self.euler == 0 && self.orientable
    }

    pub fn is_klein_bottle(&self) -> bool {
        self.euler == 0 && !self.orientable
    }

    pub fn is_sphere(&self) -> bool {
        self.euler == 2
    }
}

/// One wedge of the walk around an edge: a (tetrahedron, edge) embedding
/// entered through the face opposite `entry_apex` and left through the face
/// opposite `exit_apex`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeEmbedding {
    pub tet: usize,
    /// Ordered endpoints of the edge in this tetrahedron's labels, following
    /// the orientation in which the walk traverses the class.
    pub ends: (u8, u8),
    pub entry_apex: u8,
    pub exit_apex: u8,
}

/// The ordered walk around one edge class.
#[derive(Clone, Debug)]
pub struct EdgeWalk {
    pub embeddings: Vec<EdgeEmbedding>,
    /// True when the walk closes up (internal edge), false when it runs
    /// between two boundary faces.
    pub closed: bool,
    /// For a closed walk, the composed vertex map after one full loop;
    /// identity on the edge ends for a valid edge.  For an open walk,
    /// the composed map from the first embedding to the last.
    pub holonomy: Perm4,
}

#[derive(Clone, Debug)]
pub struct Skeleton {
    pub edges: Vec<EdgeClass>,
    pub vertices: Vec<VertexClass>,
    /// Edge class id per (tetrahedron, edge slot).
    pub edge_class_of: Vec<[usize; 6]>,
    /// Orientation of each slot relative to its class representative:
    /// +1 when the canonical (low,high) order agrees with the representative.
    pub edge_sign_of: Vec<[i8; 6]>,
    /// Vertex class id per (tetrahedron, vertex).
    pub vertex_class_of: Vec<[usize; 4]>,
    pub orientable: bool,
    pub boundary_triangles: usize,
    pub boundary_components: Vec<BoundaryComponent>,
    /// Consistent tetrahedron orientations when orientable (all +1/-1).
    pub tet_orientation: Vec<i8>,
}

impl Skeleton {
    pub fn valid(&self) -> bool {
        self.edges.iter().all(|e| e.valid)
    }

    pub fn edge_degree(&self, tet: usize, edge: u8) -> usize {
        self.edges[self.edge_class_of[tet][edge as usize]].degree
    }
}

struct SignedUf {
    parent: Vec<usize>,
    // Sign of this node relative to its parent.
    sign: Vec<i8>,
    conflict: Vec<bool>,
}

impl SignedUf {
    fn new(n: usize) -> SignedUf {
        SignedUf {
            parent: (0..n).collect(),
            sign: vec![1; n],
            conflict: vec![false; n],
        }
    }

    fn find(&mut self, x: usize) -> (usize, i8) {
        if self.parent[x] == x {
            return (x, 1);
        }
        let (root, s) = self.find(self.parent[x]);
        self.parent[x] = root;
        self.sign[x] *= s;
        (root, self.sign[x])
    }

    /// Merges with the relation sign(a) * sign(b) relative difference `rel`.
    fn union(&mut self, a: usize, b: usize, rel: i8) {
        let (ra, sa) = self.find(a);
        let (rb, sb) = self.find(b);
        if ra == rb {
            if sa * sb != rel {
                self.conflict[ra] = true;
            }
            return;
        }
        let conflict = self.conflict[ra] || self.conflict[rb];
        self.parent[rb] = ra;
        self.sign[rb] = sa * rel * sb;
        self.conflict[ra] = conflict;
    }
}

pub(crate) fn build_skeleton(tri: &Triangulation) -> Skeleton {
    let n = tri.size();

    // Edge classes with orientation.
    let mut euf = SignedUf::new(6 * n);
    for t in 0..n {
        for f in 0..4u8 {
            let Some(g) = tri.gluing(t, f) else { continue };
            for e in 0..6u8 {
                let (a, b) = EDGE_ENDS[e as usize];
                if a == f || b == f {
                    continue; // edge not on this face
                }
                let (ia, ib) = (g.perm.apply(a), g.perm.apply(b));
                let ie = edge_index(ia, ib) as u8;
                let rel = if ia < ib { 1 } else { -1 };
                euf.union(t * 6 + e as usize, g.tet * 6 + ie as usize, rel);
            }
        }
    }

    let mut edge_class_of = vec![[usize::MAX; 6]; n];
    let mut edge_sign_of = vec![[1i8; 6]; n];
    let mut edges: Vec<EdgeClass> = Vec::new();
    let mut edge_root_to_id = std::collections::HashMap::new();
    for t in 0..n {
        for e in 0..6 {
            let (root, s) = euf.find(t * 6 + e);
            let id = *edge_root_to_id.entry(root).or_insert_with(|| {
                edges.push(EdgeClass {
                    degree: 0,
                    valid: !euf.conflict[root],
                    distinct_tets: 0,
                    internal: true,
                    slots: Vec::new(),
                });
                edges.len() - 1
            });
            edge_class_of[t][e] = id;
            edge_sign_of[t][e] = s;
            edges[id].degree += 1;
            edges[id].slots.push((t, e as u8));
        }
    }
    for ec in &mut edges {
        let mut tets: Vec<usize> = ec.slots.iter().map(|&(t, _)| t).collect();
        tets.sort_unstable();
        tets.dedup();
        ec.distinct_tets = tets.len();
        ec.internal = ec.slots.iter().all(|&(t, e)| {
            let (a, b) = EDGE_ENDS[e as usize];
            (0..4u8).all(|f| f == a || f == b || !tri.is_boundary_face(t, f))
        });
    }

    // Vertex classes.
    let mut vuf = SignedUf::new(4 * n);
    for t in 0..n {
        for f in 0..4u8 {
            let Some(g) = tri.gluing(t, f) else { continue };
            for v in 0..4u8 {
                if v == f {
                    continue;
                }
                vuf.union(
                    t * 4 + v as usize,
                    g.tet * 4 + g.perm.apply(v) as usize,
                    1,
                );
            }
        }
    }
    let mut vertex_class_of = vec![[usize::MAX; 4]; n];
    let mut vertex_slots: Vec<Vec<(usize, u8)>> = Vec::new();
    let mut vertex_root_to_id = std::collections::HashMap::new();
    for t in 0..n {
        for v in 0..4 {
            let (root, _) = vuf.find(t * 4 + v);
            let id = *vertex_root_to_id.entry(root).or_insert_with(|| {
                vertex_slots.push(Vec::new());
                vertex_slots.len() - 1
            });
            vertex_class_of[t][v] = id;
            vertex_slots[id].push((t, v as u8));
        }
    }

    let vertices = link_analysis(tri, &vertex_slots);

    // Global orientability: tetrahedra can be oriented so that every gluing
    // permutation is odd.
    let mut tet_orientation = vec![0i8; n];
    let mut orientable = true;
    for start in 0..n {
        if tet_orientation[start] != 0 {
            continue;
        }
        tet_orientation[start] = 1;
        let mut stack = vec![start];
        while let Some(t) = stack.pop() {
            for f in 0..4u8 {
                let Some(g) = tri.gluing(t, f) else { continue };
                let want = -g.perm.sign() * tet_orientation[t];
                if tet_orientation[g.tet] == 0 {
                    tet_orientation[g.tet] = want;
                    stack.push(g.tet);
                } else if tet_orientation[g.tet] != want {
                    orientable = false;
                }
            }
        }
    }

    let boundary_triangles = tri.boundary_face_count();
    let boundary_components = boundary_component_analysis(tri);

    Skeleton {
        edges,
        vertices,
        edge_class_of,
        edge_sign_of,
        vertex_class_of,
        orientable,
        boundary_triangles,
        boundary_components,
        tet_orientation,
    }
}

/// Builds every vertex link as a cell complex of corner triangles and counts
/// its cells.
fn link_analysis(tri: &Triangulation, vertex_slots: &[Vec<(usize, u8)>]) -> Vec<VertexClass> {
    let n = tri.size();
    // Link cells, indexed with some waste:
    //   corner triangle (t, v):          the link piece of vertex v in tet t
    //   side (t, v, f), f != v:          the side of that piece on face f
    //   point (t, v, w), w != v:         its corner on the edge {v, w}
    let side_id = |t: usize, v: u8, f: u8| (t * 4 + v as usize) * 4 + f as usize;
    let point_id = |t: usize, v: u8, w: u8| (t * 4 + v as usize) * 4 + w as usize;

    // Pair up sides across face gluings; record each identification once.
    // side_pair[s] = Some(s2) when glued (possibly s2 == s for a degenerate
    // self-identification), None when s lies on a boundary face.
    let mut side_pair: Vec<Option<usize>> = vec![None; 16 * n];
    let mut point_uf = SignedUf::new(16 * n);
    for t in 0..n {
        for f in 0..4u8 {
            let Some(g) = tri.gluing(t, f) else { continue };
            for v in 0..4u8 {
                if v == f {
                    continue;
                }
                let s1 = side_id(t, v, f);
                let s2 = side_id(g.tet, g.perm.apply(v), g.perm.apply(f));
                side_pair[s1] = Some(s2);
                for w in 0..4u8 {
                    if w == v || w == f {
                        continue;
                    }
                    point_uf.union(
                        point_id(t, v, w),
                        point_id(g.tet, g.perm.apply(v), g.perm.apply(w)),
                        1,
                    );
                }
            }
        }
    }

    let mut out = Vec::with_capacity(vertex_slots.len());
    for slots in vertex_slots {
        let faces = slots.len() as i64;

        // Count side orbits and collect boundary sides.
        let mut side_count = 0i64;
        let mut boundary_sides = Vec::new();
        let mut degenerate = false;
        for &(t, v) in slots {
            for f in 0..4u8 {
                if f == v {
                    continue;
                }
                let s = side_id(t, v, f);
                match side_pair[s] {
                    None => {
                        side_count += 1;
                        boundary_sides.push((t, v, f));
                    }
                    Some(s2) if s2 == s => {
                        // Side folded onto itself; not a surface.
                        degenerate = true;
                        side_count += 1;
                    }
                    Some(s2) => {
                        if s <= s2 {
                            side_count += 1;
                        }
                    }
                }
            }
        }

        // Count point orbits within this class.
        let mut point_roots = std::collections::HashSet::new();
        for &(t, v) in slots {
            for w in 0..4u8 {
                if w == v {
                    continue;
                }
                point_roots.insert(point_uf.find(point_id(t, v, w)).0);
            }
        }
        let point_count = point_roots.len() as i64;

        let euler = point_count - side_count + faces;

        // Boundary circles: connected components of the graph whose vertices
        // are point orbits and whose edges are the boundary sides.
        let punctures = {
            let mut comp: std::collections::HashMap<usize, usize> =
                std::collections::HashMap::new();
            let mut parent: Vec<usize> = Vec::new();
            let mut root_of = |uf: &mut SignedUf,
                               parent: &mut Vec<usize>,
                               comp: &mut std::collections::HashMap<usize, usize>,
                               p: usize| {
                let r = uf.find(p).0;
                let idx = *comp.entry(r).or_insert_with(|| {
                    parent.push(parent.len());
                    parent.len() - 1
                });
                idx
            };
            fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
                while parent[x] != x {
                    parent[x] = parent[parent[x]];
                    x = parent[x];
                }
                x
            }
            let mut edges_cnt = 0usize;
            for &(t, v, f) in &boundary_sides {
                let mut endpoints = Vec::new();
                for w in 0..4u8 {
                    if w == v || w == f {
                        continue;
                    }
                    endpoints.push(root_of(&mut point_uf, &mut parent, &mut comp, point_id(t, v, w)));
                }
                edges_cnt += 1;
                let a = find(&mut parent, endpoints[0]);
                let b = find(&mut parent, endpoints[1]);
                if a != b {
                    parent[a] = b;
                }
            }
            if edges_cnt == 0 {
                0
            } else {
                let mut roots = std::collections::HashSet::new();
                for i in 0..parent.len() {
                    roots.insert(find(&mut parent, i));
                }
                roots.len()
            }
        };

        // Orientability of the link surface: orient each corner triangle and
        // propagate across glued sides, requiring opposite traversal of the
        // shared side.
        let orientable = {
            let mut orient: std::collections::HashMap<(usize, u8), i8> =
                std::collections::HashMap::new();
            let mut ok = !degenerate;
            for &start in slots {
                if orient.contains_key(&start) || !ok {
                    continue;
                }
                orient.insert(start, 1);
                let mut stack = vec![start];
                while let Some((t, v)) = stack.pop() {
                    let o1 = orient[&(t, v)];
                    for f in 0..4u8 {
                        if f == v {
                            continue;
                        }
                        let Some(g) = tri.gluing(t, f) else { continue };
                        let (t2, v2, f2) = (g.tet, g.perm.apply(v), g.perm.apply(f));
                        // Side endpoints: the corners on edges {v,w} with
                        // w in face f, w != v.
                        let mut ws = Vec::new();
                        for w in 0..4u8 {
                            if w != v && w != f {
                                ws.push(w);
                            }
                        }
                        let (x, y) = (ws[0], ws[1]);
                        let s1 = traversal_sign(v, x, y);
                        let s2 = traversal_sign(v2, g.perm.apply(x), g.perm.apply(y));
                        let o2_want = -o1 * s1 * s2;
                        match orient.get(&(t2, v2)) {
                            None => {
                                orient.insert((t2, v2), o2_want);
                                stack.push((t2, v2));
                            }
                            Some(&o2) => {
                                if o2 != o2_want {
                                    ok = false;
                                }
                            }
                        }
                    }
                }
            }
            ok
        };

        let kind = if degenerate {
            LinkKind::Other
        } else {
            match (euler, punctures, orientable) {
                (2, 0, _) => LinkKind::Sphere,
                (1, 1, _) => LinkKind::Disc,
                (0, 0, true) => LinkKind::Torus,
                (0, 0, false) => LinkKind::KleinBottle,
                _ => LinkKind::Other,
            }
        };

        let mut sorted = slots.clone();
        sorted.sort_unstable();
        out.push(VertexClass {
            link_euler: euler,
            punctures,
            link_orientable: orientable,
            kind,
            slots: sorted,
        });
    }
    out
}

/// +1 when the ordered pair (x, y) appears in the base cyclic order of the
/// corners of corner triangle (_, v).  Corners are labelled by the other
/// endpoint w of their edge {v, w}; the base cyclic order lists the three
/// labels in increasing order.
fn traversal_sign(v: u8, x: u8, y: u8) -> i8 {
    let mut ws: Vec<u8> = (0..4u8).filter(|&w| w != v).collect();
    ws.sort_unstable();
    let pos = |w: u8| ws.iter().position(|&z| z == w).unwrap();
    let (px, py) = (pos(x), pos(y));
    if (px + 1) % 3 == py {
        1
    } else {
        -1
    }
}

/// Walks around the edge at `(tet, edge)`, starting from the boundary when
/// the edge touches the boundary.  Only meaningful for valid edges.
pub fn edge_walk(tri: &Triangulation, tet: usize, edge: u8) -> EdgeWalk {
    let (a, b) = EDGE_ENDS[edge as usize];
    let apexes = |a: u8, b: u8| -> (u8, u8) {
        let mut it = (0..4u8).filter(|&x| x != a && x != b);
        (it.next().unwrap(), it.next().unwrap())
    };

    // Try to rewind to a boundary side first.
    let (c0, d0) = apexes(a, b);
    let mut start = (tet, a, b, c0, d0); // (tet, a, b, entry_apex, exit_apex)
    {
        // walk backwards through entry faces until boundary or full loop
        let mut cur = start;
        let mut steps = 0usize;
        loop {
            let (t, a, b, entry, _exit) = cur;
            match tri.gluing(t, entry) {
                None => {
                    // entry side is boundary: start here
                    start = cur;
                    break;
                }
                Some(g) => {
                    let p = g.perm;
                    let (na, nb) = (p.apply(a), p.apply(b));
                    let nentry_exit = p.apply(entry);
                    let (x, y) = apexes(na, nb);
                    let nentry = if x == nentry_exit { y } else { x };
                    cur = (g.tet, na, nb, nentry, nentry_exit);
                    steps += 1;
                    if steps > 12 * tri.size() + 12 {
                        break; // closed loop; keep original start
                    }
                }
            }
        }
    }

    let mut embeddings = Vec::new();
    let mut holonomy = Perm4::IDENTITY;
    let mut cur = start;
    let closed;
    loop {
        let (t, a, b, entry, exit) = cur;
        embeddings.push(EdgeEmbedding {
            tet: t,
            ends: (a, b),
            entry_apex: entry,
            exit_apex: exit,
        });
        match tri.gluing(t, exit) {
            None => {
                closed = false;
                break;
            }
            Some(g) => {
                let p = g.perm;
                holonomy = p.compose(holonomy);
                let (na, nb) = (p.apply(a), p.apply(b));
                let nentry = p.apply(exit);
                let (x, y) = apexes(na, nb);
                let nexit = if x == nentry { y } else { x };
                let next = (g.tet, na, nb, nentry, nexit);
                if next.0 == start.0
                    && next.1 == start.1
                    && next.2 == start.2
                    && next.3 == start.3
                    && next.4 == start.4
                {
                    closed = true;
                    break;
                }
                // Safety stop for invalid edges.
                if embeddings.len() > 12 * tri.size() + 12 {
                    closed = true;
                    break;
                }
                cur = next;
            }
        }
    }
    EdgeWalk {
        embeddings,
        closed,
        holonomy,
    }
}

fn boundary_component_analysis(tri: &Triangulation) -> Vec<BoundaryComponent> {
    let n = tri.size();
    let mut bfaces = Vec::new();
    for t in 0..n {
        for f in 0..4u8 {
            if tri.is_boundary_face(t, f) {
                bfaces.push((t, f));
            }
        }
    }
    if bfaces.is_empty() {
        return Vec::new();
    }
    let fidx: std::collections::HashMap<(usize, u8), usize> = bfaces
        .iter()
        .enumerate()
        .map(|(i, &bf)| (bf, i))
        .collect();

    // Pair boundary sides by walking around their edges.  A boundary side is
    // (face, edge of that face); its partner is the boundary side at the far
    // end of the walk, with a composed vertex map between them.
    let mut side_partner: std::collections::HashMap<(usize, u8, u8), ((usize, u8, u8), Perm4)> =
        std::collections::HashMap::new();
    for &(t, f) in &bfaces {
        for e in 0..6u8 {
            let (a, b) = EDGE_ENDS[e as usize];
            if a == f || b == f {
                continue;
            }
            if side_partner.contains_key(&(t, f, e)) {
                continue;
            }
            // Walk around edge e starting by leaving through the other face.
            let mut holo = Perm4::IDENTITY;
            let (mut ct, mut ca, mut cb) = (t, a, b);
            let mut exit = {
                let mut it = (0..4u8).filter(|&x| x != ca && x != cb && x != f);
                it.next().unwrap()
            };
            let (pt, pf, pe);
            loop {
                match tri.gluing(ct, exit) {
                    None => {
                        pt = ct;
                        pf = exit;
                        pe = edge_index(ca, cb) as u8;
                        break;
                    }
                    Some(g) => {
                        let p = g.perm;
                        holo = p.compose(holo);
                        let nentry = p.apply(exit);
                        ca = p.apply(ca);
                        cb = p.apply(cb);
                        ct = g.tet;
                        let mut it = (0..4u8).filter(|&x| x != ca && x != cb && x != nentry);
                        exit = it.next().unwrap();
                    }
                }
            }
            side_partner.insert((t, f, e), ((pt, pf, pe), holo));
            side_partner.insert((pt, pf, pe), ((t, f, e), holo.inverse()));
        }
    }

    // Union boundary faces into components; count corner orbits for Euler
    // characteristics and propagate orientations.
    let mut parent: Vec<usize> = (0..bfaces.len()).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (&(t, f, _e), &((t2, f2, _e2), _)) in &side_partner {
        let a = find(&mut parent, fidx[&(t, f)]);
        let b = find(&mut parent, fidx[&(t2, f2)]);
        if a != b {
            parent[a] = b;
        }
    }

    // Corner orbits: corners (face, vertex) identified across side pairings.
    let corner_id = |i: usize, v: u8| i * 4 + v as usize;
    let mut cuf = SignedUf::new(bfaces.len() * 4);
    for (&(t, f, e), &((t2, f2, _e2), holo)) in &side_partner {
        let (a, b) = EDGE_ENDS[e as usize];
        for v in [a, b] {
            cuf.union(
                corner_id(fidx[&(t, f)], v),
                corner_id(fidx[&(t2, f2)], holo.apply(v)),
                1,
            );
        }
    }

    // Orientation propagation over boundary faces.
    let mut orient: Vec<i8> = vec![0; bfaces.len()];
    let mut comp_orientable: std::collections::HashMap<usize, bool> =
        std::collections::HashMap::new();
    for i in 0..bfaces.len() {
        if orient[i] != 0 {
            continue;
        }
        orient[i] = 1;
        let mut stack = vec![i];
        while let Some(cur) = stack.pop() {
            let (t, f) = bfaces[cur];
            for e in 0..6u8 {
                let (a, b) = EDGE_ENDS[e as usize];
                if a == f || b == f {
                    continue;
                }
                let ((t2, f2, _), holo) = side_partner[&(t, f, e)];
                let j = fidx[&(t2, f2)];
                let s1 = face_traversal_sign(f, a, b);
                let s2 = face_traversal_sign(f2, holo.apply(a), holo.apply(b));
                let want = -orient[cur] * s1 * s2;
                if orient[j] == 0 {
                    orient[j] = want;
                    stack.push(j);
                } else if orient[j] != want {
                    let root = find(&mut parent, j);
                    comp_orientable.insert(root, false);
                }
            }
        }
    }

    let mut by_root: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..bfaces.len() {
        let r = find(&mut parent, i);
        by_root.entry(r).or_default().push(i);
    }
    let mut out = Vec::new();
    for (root, members) in by_root {
        let f_cnt = members.len() as i64;
        let e_cnt = (members.len() * 3 / 2) as i64;
        let mut corner_roots = std::collections::HashSet::new();
        for &i in &members {
            let (_, f) = bfaces[i];
            for v in 0..4u8 {
                if v != f {
                    corner_roots.insert(cuf.find(corner_id(i, v)).0);
                }
            }
        }
        let v_cnt = corner_roots.len() as i64;
        let mut faces: Vec<(usize, u8)> = members.iter().map(|&i| bfaces[i]).collect();
        faces.sort_unstable();
        out.push(BoundaryComponent {
            triangles: members.len(),
            euler: v_cnt - e_cnt + f_cnt,
            orientable: *comp_orientable.get(&root).unwrap_or(&true),
            faces,
        });
    }
    out
}

/// Like `traversal_sign`, but for a boundary face `f` whose corners are the
/// three vertices other than `f` in increasing order.
fn face_traversal_sign(f: u8, x: u8, y: u8) -> i8 {
    let vs: Vec<u8> = (0..4u8).filter(|&v| v != f).collect();
    let pos = |w: u8| vs.iter().position(|&z| z == w).unwrap();
    if (pos(x) + 1) % 3 == pos(y) {
        1
    } else {
        -1
    }
}

impl Triangulation {
    /// Full orbit decomposition of edge and vertex slots with link analysis.
    pub fn skeleton(&self) -> Skeleton {
        build_skeleton(self)
    }

    /// True iff this triangulation is connected, has no boundary triangles,
    /// no invalid edges, and every vertex link is a torus or Klein bottle.
    pub fn is_ideal_candidate(&self) -> bool {
        if self.is_empty() || !self.is_connected() || self.boundary_face_count() > 0 {
            return false;
        }
        let skel = self.skeleton();
        skel.valid()
            && skel
                .vertices
                .iter()
                .all(|v| matches!(v.kind, LinkKind::Torus | LinkKind::KleinBottle))
    }

    /// True iff no edge has degree 1 or 2 and no degree-3 edge meets three
    /// distinct tetrahedra.
    pub fn satisfies_low_degree_constraints(&self) -> bool {
        let skel = self.skeleton();
        skel.edges.iter().all(|e| {
            !e.internal || (e.degree > 3 || (e.degree == 3 && e.distinct_tets < 3))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unglued_tetrahedron() {
        let tri = Triangulation::new(1);
        let skel = tri.skeleton();
        assert_eq!(skel.vertices.len(), 4);
        for v in &skel.vertices {
            assert_eq!(v.kind, LinkKind::Disc);
            assert_eq!(v.link_euler, 1);
            assert_eq!(v.punctures, 1);
        }
        assert_eq!(skel.edges.len(), 6);
        for e in &skel.edges {
            assert_eq!(e.degree, 1);
            assert!(e.valid);
        }
        assert_eq!(skel.boundary_triangles, 4);
        assert_eq!(skel.boundary_components.len(), 1);
        assert!(skel.boundary_components[0].is_sphere());
        assert!(skel.orientable);
        assert!(!tri.is_ideal_candidate());
    }

    #[test]
    fn slot_counts_add_up() {
        // Two tetrahedra glued along one face.
        let mut tri = Triangulation::new(2);
        tri.join(0, 0, 1, Perm4::from_images([1, 0, 2, 3])).unwrap();
        let skel = tri.skeleton();
        let edge_total: usize = skel.edges.iter().map(|e| e.degree).sum();
        assert_eq!(edge_total, 12);
        let vertex_total: usize = skel.vertices.iter().map(|v| v.slots.len()).sum();
        assert_eq!(vertex_total, 8);
    }

    #[test]
    fn folded_face_gives_invalid_edge() {
        // Glue two faces of one tetrahedron with a reflection across their
        // common edge: the common edge is identified with itself in reverse.
        let mut tri = Triangulation::new(1);
        // face 0 -> face 1 via [1,0,3,2]: common edge {2,3} maps to {3,2}.
        tri.join(0, 0, 0, Perm4::from_images([1, 0, 3, 2])).unwrap();
        let skel = tri.skeleton();
        assert!(!skel.valid());
    }

    #[test]
    fn book_fold_gives_degree_one_edge() {
        // Glue face 0 to face 1 of one tetrahedron fixing the common edge
        // pointwise: the common edge {2,3} gets degree 1 and stays valid.
        let mut tri = Triangulation::new(1);
        tri.join(0, 0, 0, Perm4::from_images([1, 0, 2, 3])).unwrap();
        let skel = tri.skeleton();
        assert!(skel.valid());
        let d = skel.edge_degree(0, edge_index(2, 3) as u8);
        assert_eq!(d, 1);
        assert!(!tri.satisfies_low_degree_constraints());
    }

    #[test]
    fn edge_walk_boundary_path() {
        let mut tri = Triangulation::new(2);
        tri.join(0, 0, 1, Perm4::from_images([1, 0, 2, 3])).unwrap();
        // Edge {2,3} of tet 0 lies on the glued face 0 and on face 1.
        let walk = edge_walk(&tri, 0, edge_index(2, 3) as u8);
        assert!(!walk.closed);
        assert_eq!(walk.embeddings.len(), 2);
    }
}
