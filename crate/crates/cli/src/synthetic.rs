//! A deterministic table-assembly demonstration in 2D positions: four legs
//! are attached one by one to four connectors, with two brief distractor
//! frames where loose legs are piled together.

use std::ops::RangeInclusive;

use crate::ingest::PositionFrame;

/// Frames with every leg still in storage.
pub const IDLE: RangeInclusive<u64> = 1..=19;
/// Frames during which `i + 1` legs are attached, for `i` in `0..4`.
pub const STAGES: [RangeInclusive<u64>; 4] = [20..=31, 32..=43, 44..=55, 56..=68];
/// Frames with loose legs piled next to each other.
pub const DISTRACTORS: [u64; 2] = [26, 38];
pub const FRAMES: u64 = 68;

const CONNECTORS: [(f64, f64); 4] = [(0.0, 0.0), (0.5, 0.0), (0.0, 0.5), (0.5, 0.5)];
/// Attachment offset: 0.0375 m gives a connection degree of 0.75 at 0.15 m.
const OFFSET: f64 = 0.0375;
const JITTER: [f64; 7] = [0.0, 0.0006, -0.0006, 0.0012, -0.0012, 0.0003, -0.0009];

fn stored(i: usize) -> (f64, f64) {
    (1.5, 0.5 * i as f64)
}

/// Number of legs attached at frame `t`.
pub fn attached_legs(t: u64) -> usize {
    STAGES
        .iter()
        .position(|r| r.contains(&t))
        .map_or(0, |i| i + 1)
}

pub fn assembly_frame(t: u64) -> PositionFrame {
    let attached = attached_legs(t);
    let mut frame = PositionFrame::new(t);
    for (i, &(x, y)) in CONNECTORS.iter().enumerate() {
        frame = frame.with_object(&format!("c{}", i + 1), "CONNECTOR", 1.0, x, y);
    }
    let piles: &[(f64, f64)] = if t == DISTRACTORS[0] {
        &[(1.2, 1.2), (1.22, 1.2), (1.2, 1.22)]
    } else if t == DISTRACTORS[1] {
        &[(1.2, 1.2), (1.2075, 1.2)]
    } else {
        &[]
    };
    let mut piled = piles.iter();
    for i in 0..4 {
        let (x, y) = if i < attached {
            let (cx, cy) = CONNECTORS[i];
            (
                cx + OFFSET + JITTER[(t as usize + 3 * i) % JITTER.len()],
                cy,
            )
        } else {
            piled.next().copied().unwrap_or_else(|| stored(i))
        };
        frame = frame.with_object(&format!("leg{}", i + 1), "LEG", 1.0, x, y);
    }
    frame
}

/// Frames `1..=FRAMES`.
pub fn assembly_demo() -> Vec<PositionFrame> {
    (1..=FRAMES).map(assembly_frame).collect()
}
