//! Permutations of `{0,1,2,3}`, the symmetric group on tetrahedron vertex
//! labels.
//!
//! Every permutation is identified by its index in `0..24`, which is the
//! lexicographic rank of its image tuple `(p(0), p(1), p(2), p(3))`.  Index 0
//! is the identity and index 23 is `(3,2,1,0)`.  This bijection is fixed and
//! is part of every on-disk format that mentions permutations.

/// All 24 image tuples in lexicographic order.
const IMAGES: [[u8; 4]; 24] = build_images();

const fn build_images() -> [[u8; 4]; 24] {
    let mut out = [[0u8; 4]; 24];
    let mut count = 0;
    let mut a = 0;
    while a < 4 {
        let mut b = 0;
        while b < 4 {
            let mut c = 0;
            while c < 4 {
                let mut d = 0;
                while d < 4 {
                    if a != b && a != c && a != d && b != c && b != d && c != d {
                        out[count] = [a as u8, b as u8, c as u8, d as u8];
                        count += 1;
                    }
                    d += 1;
                }
                c += 1;
            }
            b += 1;
        }
        a += 1;
    }
    out
}

const fn rank_of(img: [u8; 4]) -> u8 {
    let mut i = 0;
    while i < 24 {
        if IMAGES[i][0] == img[0]
            && IMAGES[i][1] == img[1]
            && IMAGES[i][2] == img[2]
            && IMAGES[i][3] == img[3]
        {
            return i as u8;
        }
        i += 1;
    }
    unreachable!()
}

const MUL: [[u8; 24]; 24] = build_mul();

const fn build_mul() -> [[u8; 24]; 24] {
    let mut out = [[0u8; 24]; 24];
    let mut i = 0;
    while i < 24 {
        let mut j = 0;
        while j < 24 {
            // (i * j)(x) = i(j(x))
            let img = [
                IMAGES[i][IMAGES[j][0] as usize],
                IMAGES[i][IMAGES[j][1] as usize],
                IMAGES[i][IMAGES[j][2] as usize],
                IMAGES[i][IMAGES[j][3] as usize],
            ];
            out[i][j] = rank_of(img);
            j += 1;
        }
        i += 1;
    }
    out
}

const INV: [u8; 24] = build_inv();

const fn build_inv() -> [u8; 24] {
    let mut out = [0u8; 24];
    let mut i = 0;
    while i < 24 {
        let mut inv = [0u8; 4];
        let mut x = 0;
        while x < 4 {
            inv[IMAGES[i][x] as usize] = x as u8;
            x += 1;
        }
        out[i] = rank_of(inv);
        i += 1;
    }
    out
}

const SIGN: [i8; 24] = build_sign();

const fn build_sign() -> [i8; 24] {
    let mut out = [0i8; 24];
    let mut i = 0;
    while i < 24 {
        let img = IMAGES[i];
        let mut inversions = 0;
        let mut a = 0;
        while a < 4 {
            let mut b = a + 1;
            while b < 4 {
                if img[a] > img[b] {
                    inversions += 1;
                }
                b += 1;
            }
            a += 1;
        }
        out[i] = if inversions % 2 == 0 { 1 } else { -1 };
        i += 1;
    }
    out
}

/// A permutation of `{0,1,2,3}`, stored as its lexicographic rank.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm4(u8);

impl Perm4 {
    pub const IDENTITY: Perm4 = Perm4(0);

    /// The permutation with the given lexicographic rank (`0..24`).
    pub fn from_index(index: u8) -> Perm4 {
        assert!(index < 24, "permutation index out of range: {index}");
        Perm4(index)
    }

    /// The permutation sending `i` to `img[i]`.
    pub fn from_images(img: [u8; 4]) -> Perm4 {
        let mut seen = [false; 4];
        for &v in &img {
            assert!(v < 4 && !seen[v as usize], "not a permutation: {img:?}");
            seen[v as usize] = true;
        }
        Perm4(rank_of(img))
    }

    /// The transposition swapping `a` and `b` (which may be equal, giving
    /// the identity).
    pub fn transposition(a: u8, b: u8) -> Perm4 {
        let mut img = [0u8, 1, 2, 3];
        img.swap(a as usize, b as usize);
        Perm4(rank_of(img))
    }

    pub fn index(self) -> u8 {
        self.0
    }

    pub fn apply(self, x: u8) -> u8 {
        IMAGES[self.0 as usize][x as usize]
    }

    pub fn images(self) -> [u8; 4] {
        IMAGES[self.0 as usize]
    }

    /// Composition: `(p.then_apply(q))(x) = p(q(x))`.
    pub fn compose(self, other: Perm4) -> Perm4 {
        Perm4(MUL[self.0 as usize][other.0 as usize])
    }

    pub fn inverse(self) -> Perm4 {
        Perm4(INV[self.0 as usize])
    }

    /// +1 for even permutations, -1 for odd ones.
    pub fn sign(self) -> i8 {
        SIGN[self.0 as usize]
    }

    pub fn is_identity(self) -> bool {
        self.0 == 0
    }

    pub fn all() -> impl Iterator<Item = Perm4> {
        (0..24).map(Perm4)
    }

    /// The six permutations `p` with `p(from) = to`, in index order.  These
    /// are the possible gluings of face `from` onto face `to`.
    pub fn face_gluings(from: u8, to: u8) -> impl Iterator<Item = Perm4> {
        Perm4::all().filter(move |p| p.apply(from) == to)
    }
}

impl std::fmt::Debug for Perm4 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let img = self.images();
        write!(f, "{}{}{}{}", img[0], img[1], img[2], img[3])
    }
}

impl std::fmt::Display for Perm4 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Debug::fmt(self, f)
    }
}

/// The six edges of a tetrahedron: index 0..6 maps to the vertex pairs
/// (01, 02, 03, 12, 13, 23).  This ordering is fixed across the crate.
pub const EDGE_ENDS: [(u8, u8); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Edge index for a vertex pair, in either order.
pub fn edge_index(a: u8, b: u8) -> usize {
    debug_assert!(a != b && a < 4 && b < 4);
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    match (a, b) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        (2, 3) => 5,
        _ => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_axioms_by_exhaustion() {
        for p in Perm4::all() {
            assert_eq!(p.compose(Perm4::IDENTITY), p);
            assert_eq!(Perm4::IDENTITY.compose(p), p);
            assert_eq!(p.compose(p.inverse()), Perm4::IDENTITY);
            assert_eq!(p.inverse().compose(p), Perm4::IDENTITY);
            for q in Perm4::all() {
                let pq = p.compose(q);
                for x in 0..4 {
                    assert_eq!(pq.apply(x), p.apply(q.apply(x)));
                }
                for r in Perm4::all() {
                    assert_eq!(p.compose(q).compose(r), p.compose(q.compose(r)));
                }
            }
        }
    }

    #[test]
    fn index_bijection_is_lexicographic() {
        assert_eq!(Perm4::from_index(0).images(), [0, 1, 2, 3]);
        assert_eq!(Perm4::from_index(1).images(), [0, 1, 3, 2]);
        assert_eq!(Perm4::from_index(23).images(), [3, 2, 1, 0]);
        let mut last = None;
        for p in Perm4::all() {
            if let Some(prev) = last {
                assert!(prev < p.images(), "indices must follow lex order");
            }
            last = Some(p.images());
            assert_eq!(Perm4::from_images(p.images()), p);
        }
    }

    #[test]
    fn sign_is_multiplicative() {
        for p in Perm4::all() {
            for q in Perm4::all() {
                assert_eq!(p.compose(q).sign(), p.sign() * q.sign());
            }
        }
        assert_eq!(Perm4::IDENTITY.sign(), 1);
        assert_eq!(Perm4::transposition(0, 1).sign(), -1);
    }

    #[test]
    fn face_gluings_count() {
        for from in 0..4 {
            for to in 0..4 {
                assert_eq!(Perm4::face_gluings(from, to).count(), 6);
            }
        }
    }

    #[test]
    fn edge_index_round_trip() {
        for (i, &(a, b)) in EDGE_ENDS.iter().enumerate() {
            assert_eq!(edge_index(a, b), i);
            assert_eq!(edge_index(b, a), i);
        }
    }
}
