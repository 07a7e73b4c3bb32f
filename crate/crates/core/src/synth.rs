//! Seeded generators for synthetic simple-support corpora.
//!
//! Every corpus position derives its own counter-based stream from
//! `(seed, index)`, so corpora are reproducible bit for bit, positions can
//! be generated in any order (or concurrently), and enlarging a corpus
//! extends it without disturbing the positions already drawn. The mixer is
//! pinned here rather than taken from an external generator so the streams
//! can never change underneath a published seed.

use crate::error::Error;
use crate::frame::{Frame, SubsetIndex};
use crate::ssf::SimpleSupport;
use crate::Result;

/// A corpus seed. The same seed and parameters always reproduce the same
/// corpus, bit for bit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Seed(pub u64);

/// Offset separating focal-element blocks in corpus index space, so that a
/// block keeps its draws when another block grows.
const BLOCK_STRIDE: u64 = 1 << 40;

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// A splittable deterministic stream of uniform numbers (splitmix64).
#[derive(Clone, Debug)]
pub struct Stream {
    state: u64,
}

impl Stream {
    /// Derives the stream for corpus position `index` under `seed`.
    pub fn new(seed: Seed, index: u64) -> Stream {
        Stream {
            state: mix(seed.0.wrapping_add(mix(index.wrapping_add(0x9e37_79b9_7f4a_7c15)))),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        mix(self.state)
    }

    /// Uniform draw strictly inside (0, 1).
    pub fn next_unit(&mut self) -> f64 {
        ((self.next_u64() >> 11) as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
    }
}

/// Draws a simple support function on `focal` with weight uniform in (0, 1).
pub fn random_ssf(frame: &Frame, focal: SubsetIndex, stream: &mut Stream) -> Result<SimpleSupport> {
    frame.check_subset(focal)?;
    if focal.is_empty() {
        return Err(Error::EmptyFocal);
    }
    SimpleSupport::new(frame.clone(), focal, stream.next_unit())
}

/// Draws a simple support function on a singleton whose focal mass is
/// uniform in (0.5, 1) — the distribution rejection sampling past one half
/// would produce.
pub fn random_dominant_ssf(
    frame: &Frame,
    singleton: SubsetIndex,
    stream: &mut Stream,
) -> Result<SimpleSupport> {
    frame.check_subset(singleton)?;
    if singleton.cardinality() != 1 {
        return Err(Error::NotSingleton(frame.describe(singleton)));
    }
    let focal_mass = 0.5 + 0.5 * stream.next_unit();
    SimpleSupport::new(frame.clone(), singleton, 1.0 - focal_mass)
}

/// Corpus for the precision-sweep experiment: `s1` simple supports on the
/// first singleton, `s2` on the second, `s3` on the pair of the second and
/// third outcomes, all weights uniform in (0, 1). Requires a three-outcome
/// frame.
pub fn exp2_corpus(
    frame: &Frame,
    s1: usize,
    s2: usize,
    s3: usize,
    seed: Seed,
) -> Result<Vec<SimpleSupport>> {
    if frame.len() != 3 {
        return Err(Error::FrameMismatch);
    }
    let blocks = [
        (SubsetIndex::singleton(0), s1),
        (SubsetIndex::singleton(1), s2),
        (SubsetIndex::from_bits(0b110), s3),
    ];
    let mut corpus = Vec::with_capacity(s1 + s2 + s3);
    for (block, (focal, count)) in blocks.into_iter().enumerate() {
        for j in 0..count {
            let mut stream = Stream::new(seed, block as u64 * BLOCK_STRIDE + j as u64);
            corpus.push(random_ssf(frame, focal, &mut stream)?);
        }
    }
    Ok(corpus)
}

/// Corpus for the conflict-scaling experiment: `t * s2` dominant simple
/// supports on the first singleton and `s2` on the second. Requires a
/// two-outcome frame. At a fixed seed the draws for a block depend only on
/// the position within the block, so raising `t` extends the first block
/// while the opposing block stays identical.
pub fn exp3_corpus(frame: &Frame, s2: usize, t: usize, seed: Seed) -> Result<Vec<SimpleSupport>> {
    if frame.len() != 2 {
        return Err(Error::FrameMismatch);
    }
    let s1 = t * s2;
    let mut corpus = Vec::with_capacity(s1 + s2);
    for j in 0..s1 {
        let mut stream = Stream::new(seed, j as u64);
        corpus.push(random_dominant_ssf(frame, SubsetIndex::singleton(0), &mut stream)?);
    }
    for j in 0..s2 {
        let mut stream = Stream::new(seed, BLOCK_STRIDE + j as u64);
        corpus.push(random_dominant_ssf(frame, SubsetIndex::singleton(1), &mut stream)?);
    }
    Ok(corpus)
}
