//! Isomorphism signatures: printable strings that identify a triangulation
//! exactly up to relabelling of tetrahedra and vertices.
//!
//! The encoding works per connected component.  Fixing a start tetrahedron
//! and a start vertex labelling determines a canonical relabelling by label
//! propagation: walking the face slots of relabelled tetrahedra in order,
//! a slot that discovers an unseen tetrahedron assigns it the next label and
//! the vertex labelling that turns the joining permutation into the
//! identity.  The walk emits one token per unconsumed slot — boundary, "new
//! tetrahedron", or "join to tetrahedron m via permutation q" — and the
//! signature is the lexicographically smallest token stream over all
//! `24 * n` starts.  Token streams are rendered through a base-32 varint
//! over a 64-character alphabet; components of a disconnected triangulation
//! are signed separately and joined with `.` in sorted order.
//!
//! The exact byte layout is documented in `docs/formats.md` and pinned by
//! golden tests.

use super::{Gluing, Triangulation};
use crate::perm::Perm4;

const ALPHABET: &[u8; 64] = b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789+-";

/// A canonical signature string.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IsoSignature(String);

impl IsoSignature {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }

    /// Reconstructs the canonically labelled triangulation.
    pub fn parse(&self) -> Result<Triangulation, SigError> {
        IsoSignature::parse_str(&self.0)
    }

    pub fn parse_str(s: &str) -> Result<Triangulation, SigError> {
        if s.is_empty() {
            return Err(SigError("empty signature".into()));
        }
        let mut parts = Vec::new();
        for part in s.split('.') {
            parts.push(decode_component(part)?);
        }
        let mut tri = Triangulation::empty();
        for part in parts {
            tri = tri.disjoint_union(&part);
        }
        Ok(tri)
    }
}

impl std::fmt::Display for IsoSignature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::fmt::Debug for IsoSignature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "IsoSignature({})", self.0)
    }
}

#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct SigError(String);

impl Triangulation {
    /// The canonical signature: equal for two triangulations exactly when
    /// they differ by a relabelling of tetrahedra and vertices.
    pub fn isosig(&self) -> IsoSignature {
        let comps = self.components();
        if comps.is_empty() {
            return IsoSignature(encode_stream(&[0]));
        }
        let mut strings: Vec<String> = comps
            .iter()
            .map(|c| encode_stream(&canonical_stream(c)))
            .collect();
        strings.sort();
        IsoSignature(strings.join("."))
    }

    /// True iff the two triangulations are related by a relabelling.
    pub fn is_isomorphic_to(&self, other: &Triangulation) -> bool {
        self.isosig() == other.isosig()
    }

    /// The canonically relabelled copy of this triangulation (the one the
    /// signature denotes).
    pub fn canonical_form(&self) -> Triangulation {
        self.isosig().parse().expect("own signature must parse")
    }
}

/// The minimal token stream over all starts, for a connected triangulation.
fn canonical_stream(tri: &Triangulation) -> Vec<u32> {
    let n = tri.size();
    let mut best: Option<Vec<u32>> = None;
    for start in 0..n {
        for sigma in Perm4::all() {
            let stream = stream_from(tri, start, sigma, best.as_deref());
            if let Some(s) = stream {
                if best.as_ref().map_or(true, |b| s < *b) {
                    best = Some(s);
                }
            }
        }
    }
    best.expect("connected triangulation with n >= 1")
}

/// Encodes from a given start; aborts early (returning None) as soon as the
/// stream provably exceeds `beat`.
fn stream_from(
    tri: &Triangulation,
    start: usize,
    sigma: Perm4,
    beat: Option<&[u32]>,
) -> Option<Vec<u32>> {
    let n = tri.size();
    let mut stream = Vec::with_capacity(4 * n + 1);
    stream.push(n as u32);

    // order[new] = old, relab[old] = vertex relabelling, label[old] = new
    let mut order = Vec::with_capacity(n);
    let mut label = vec![usize::MAX; n];
    let mut relab = vec![Perm4::IDENTITY; n];
    order.push(start);
    label[start] = 0;
    relab[start] = sigma;

    let mut consumed = vec![[false; 4]; n];
    let mut pos = 1usize; // next index in `stream` to compare against `beat`

    let mut k = 0;
    while k < order.len() {
        let old_t = order[k];
        for f in 0..4u8 {
            // Slot (k, f) in new labels.
            let old_f = relab[old_t].inverse().apply(f);
            if consumed[old_t][old_f as usize] {
                continue;
            }
            consumed[old_t][old_f as usize] = true;
            let token = match tri.gluing(old_t, old_f) {
                None => 0u32,
                Some(Gluing { tet: t2, perm: p }) => {
                    if label[t2] == usize::MAX {
                        // Discover t2; force the joining permutation to be the
                        // identity in new labels.
                        label[t2] = order.len();
                        relab[t2] = relab[old_t].compose(p.inverse());
                        order.push(t2);
                        // Partner slot in old labels is (t2, p(old_f)).
                        consumed[t2][p.apply(old_f) as usize] = true;
                        1
                    } else {
                        let q = relab[t2].compose(p).compose(relab[old_t].inverse());
                        consumed[t2][p.apply(old_f) as usize] = true;
                        2 + (label[t2] as u32) * 24 + q.index() as u32
                    }
                }
            };
            stream.push(token);
            if let Some(b) = beat {
                match b.get(pos) {
                    Some(&bt) if token > bt => return None,
                    Some(&bt) if token < bt => {
                        // Now strictly smaller: stop comparing.
                        finish_stream(tri, &mut stream, &mut order, &mut label, &mut relab, &mut consumed, k, f);
                        return Some(stream);
                    }
                    _ => {}
                }
            }
            pos += 1;
        }
        k += 1;
    }
    Some(stream)
}

/// Completes the token stream without further comparisons (used once a
/// candidate is known to be strictly smaller than the current best).
#[allow(clippy::too_many_arguments)]
fn finish_stream(
    tri: &Triangulation,
    stream: &mut Vec<u32>,
    order: &mut Vec<usize>,
    label: &mut [usize],
    relab: &mut [Perm4],
    consumed: &mut [[bool; 4]],
    k0: usize,
    f0: u8,
) {
    let mut k = k0;
    let mut fstart = f0 + 1;
    while k < order.len() {
        let old_t = order[k];
        for f in fstart..4u8 {
            let old_f = relab[old_t].inverse().apply(f);
            if consumed[old_t][old_f as usize] {
                continue;
            }
            consumed[old_t][old_f as usize] = true;
            let token = match tri.gluing(old_t, old_f) {
                None => 0u32,
                Some(Gluing { tet: t2, perm: p }) => {
                    if label[t2] == usize::MAX {
                        label[t2] = order.len();
                        relab[t2] = relab[old_t].compose(p.inverse());
                        order.push(t2);
                        consumed[t2][p.apply(old_f) as usize] = true;
                        1
                    } else {
                        let q = relab[t2].compose(p).compose(relab[old_t].inverse());
                        consumed[t2][p.apply(old_f) as usize] = true;
                        2 + (label[t2] as u32) * 24 + q.index() as u32
                    }
                }
            };
            stream.push(token);
        }
        k += 1;
        fstart = 0;
    }
}

fn decode_component(s: &str) -> Result<Triangulation, SigError> {
    let mut values = decode_stream(s)?;
    values.reverse(); // pop from the front
    let n = values
        .pop()
        .ok_or_else(|| SigError("missing tetrahedron count".into()))? as usize;
    let mut tri = Triangulation::new(n);
    let mut next_label = if n > 0 { 1 } else { 0 };
    let mut consumed = vec![[false; 4]; n];
    for k in 0..n {
        for f in 0..4u8 {
            if consumed[k][f as usize] {
                continue;
            }
            consumed[k][f as usize] = true;
            let token = values
                .pop()
                .ok_or_else(|| SigError("truncated signature".into()))?;
            match token {
                0 => {}
                1 => {
                    if next_label >= n {
                        return Err(SigError("new-tetrahedron token overflows".into()));
                    }
                    let m = next_label;
                    next_label += 1;
                    consumed[m][f as usize] = true;
                    tri.join(k, f, m, Perm4::IDENTITY)
                        .map_err(|e| SigError(e.to_string()))?;
                }
                x => {
                    let x = x - 2;
                    let m = (x / 24) as usize;
                    let q = Perm4::from_index((x % 24) as u8);
                    if m >= n {
                        return Err(SigError("join destination out of range".into()));
                    }
                    consumed[m][q.apply(f) as usize] = true;
                    tri.join(k, f, m, q).map_err(|e| SigError(e.to_string()))?;
                }
            }
        }
    }
    if !values.is_empty() {
        return Err(SigError("trailing data in signature".into()));
    }
    if n > 0 && next_label != n {
        return Err(SigError("signature does not describe a connected triangulation".into()));
    }
    Ok(tri)
}

/// Base-32 little-endian varint over ALPHABET; bit 5 of each character is the
/// continuation flag.
fn encode_stream(values: &[u32]) -> String {
    let mut out = String::new();
    for &v in values {
        let mut v = v;
        loop {
            let chunk = (v & 31) as usize;
            v >>= 5;
            let more = if v != 0 { 32 } else { 0 };
            out.push(ALPHABET[chunk | more] as char);
            if v == 0 {
                break;
            }
        }
    }
    out
}

fn decode_stream(s: &str) -> Result<Vec<u32>, SigError> {
    let mut pos = [255u8; 256];
    for (i, &c) in ALPHABET.iter().enumerate() {
        pos[c as usize] = i as u8;
    }
    let mut out = Vec::new();
    let mut cur: u64 = 0;
    let mut shift = 0;
    for c in s.bytes() {
        let v = pos[c as usize];
        if v == 255 {
            return Err(SigError(format!("bad character `{}`", c as char)));
        }
        cur |= ((v & 31) as u64) << shift;
        if v & 32 != 0 {
            shift += 5;
            if shift > 30 {
                return Err(SigError("varint overflow".into()));
            }
        } else {
            out.push(cur as u32);
            cur = 0;
            shift = 0;
        }
    }
    if shift != 0 {
        return Err(SigError("dangling continuation".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm4;

    fn sample() -> Triangulation {
        let mut tri = Triangulation::new(3);
        tri.join(0, 0, 1, Perm4::from_images([1, 2, 3, 0])).unwrap();
        tri.join(0, 1, 2, Perm4::from_images([0, 2, 1, 3])).unwrap();
        tri.join(1, 2, 2, Perm4::from_images([3, 1, 2, 0])).unwrap();
        tri
    }

    #[test]
    fn invariant_under_relabelling() {
        let tri = sample();
        let base = tri.isosig();
        // A handful of deterministic relabellings.
        let perms: Vec<Perm4> = Perm4::all().collect();
        for (i, shift) in [(1usize, 3usize), (5, 7), (11, 13), (23, 1)] {
            let n = tri.size();
            let tet_map: Vec<usize> = (0..n).map(|t| (t + shift) % n).collect();
            let vmap: Vec<Perm4> = (0..n).map(|t| perms[(t * i + shift) % 24]).collect();
            let relabelled = tri.relabel(&tet_map, &vmap);
            assert_eq!(relabelled.isosig(), base);
        }
    }

    #[test]
    fn exhaustive_relabellings_one_tet() {
        // For n = 1 we can check all 24 relabellings of each candidate shape.
        let mut tri = Triangulation::new(1);
        tri.join(0, 0, 0, Perm4::from_images([1, 2, 0, 3])).unwrap();
        let base = tri.isosig();
        for p in Perm4::all() {
            assert_eq!(tri.relabel(&[0], &[p]).isosig(), base);
        }
    }

    #[test]
    fn round_trip() {
        let tri = sample();
        let sig = tri.isosig();
        let back = sig.parse().unwrap();
        assert_eq!(back.isosig(), sig);
        assert_eq!(back.size(), tri.size());
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        let mut a = Triangulation::new(2);
        a.join(0, 0, 1, Perm4::IDENTITY.compose(Perm4::from_images([1, 0, 2, 3])))
            .unwrap();
        let mut b = Triangulation::new(2);
        b.join(0, 0, 1, Perm4::from_images([1, 0, 2, 3])).unwrap();
        b.join(0, 1, 1, Perm4::from_images([0, 1, 3, 2])).unwrap();
        assert_ne!(a.isosig(), b.isosig());
    }

    #[test]
    fn disconnected_components_sorted() {
        let a = sample();
        let mut single = Triangulation::new(1);
        single
            .join(0, 0, 0, Perm4::from_images([1, 2, 0, 3]))
            .unwrap();
        let u1 = a.disjoint_union(&single);
        let u2 = single.disjoint_union(&a);
        assert_eq!(u1.isosig(), u2.isosig());
        let parsed = u1.isosig().parse().unwrap();
        assert_eq!(parsed.isosig(), u1.isosig());
        assert_eq!(parsed.components().len(), 2);
    }

    #[test]
    fn empty_signature() {
        let empty = Triangulation::empty();
        let sig = empty.isosig();
        let back = sig.parse().unwrap();
        assert!(back.is_empty());
    }

    #[test]
    fn boundary_faces_survive() {
        let tri = Triangulation::new(1);
        let back = tri.isosig().parse().unwrap();
        assert_eq!(back.boundary_face_count(), 4);
    }
}
