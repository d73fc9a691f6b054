//! A5/1: three majority-clocked registers of 19, 22 and 23 bits.
//!
//! Bit 0 of each register is the input end. Feedback taps are
//! R1 {13,16,17,18}, R2 {20,21}, R3 {7,20,21,22}; clocking bits are
//! R1[8], R2[10], R3[10]; the output is R1[18] ^ R2[21] ^ R3[22].

pub const LENGTHS: [u32; 3] = [19, 22, 23];
pub const TAPS: [u32; 3] = [0x072000, 0x300000, 0x700080];
pub const CLOCK_BITS: [u32; 3] = [8, 10, 10];
pub const KEY_CYCLES: usize = 64;
pub const FRAME_CYCLES: usize = 22;
pub const MIX_CYCLES: usize = 100;
pub const OUTPUT_BITS: usize = 228;

fn parity(x: u32) -> u32 {
    x.count_ones() & 1
}

fn mask(i: usize) -> u32 {
    (1 << LENGTHS[i]) - 1
}

/// Cycle counts consumed by each setup and output phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PhaseCounts {
    pub loading: usize,
    pub mixing: usize,
    pub output: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct A51 {
    regs: [u32; 3],
    advances: [u64; 3],
    majority_cycles: u64,
}

impl A51 {
    pub fn zeroed() -> Self {
        Self::default()
    }

    pub fn registers(&self) -> [u32; 3] {
        self.regs
    }

    pub fn set_registers(&mut self, regs: [u32; 3]) {
        for (i, r) in regs.iter().enumerate() {
            self.regs[i] = r & mask(i);
        }
    }

    fn clock_one(&mut self, i: usize) {
        let fb = parity(self.regs[i] & TAPS[i]);
        self.regs[i] = ((self.regs[i] << 1) | fb) & mask(i);
        self.advances[i] += 1;
    }

    pub fn clock_regular(&mut self) {
        for i in 0..3 {
            self.clock_one(i);
        }
    }

    pub fn clocking_bits(&self) -> [u8; 3] {
        std::array::from_fn(|i| (self.regs[i] >> CLOCK_BITS[i] & 1) as u8)
    }

    /// Advances exactly the registers whose clocking bit agrees with the majority.
    pub fn clock_majority(&mut self) -> [bool; 3] {
        let c = self.clocking_bits();
        let maj = majority(c[0], c[1], c[2]);
        let moved = std::array::from_fn(|i| c[i] == maj);
        for (i, &m) in moved.iter().enumerate() {
            if m {
                self.clock_one(i);
            }
        }
        self.majority_cycles += 1;
        moved
    }

    pub fn output(&self) -> u8 {
        ((self.regs[0] >> 18 ^ self.regs[1] >> 21 ^ self.regs[2] >> 22) & 1) as u8
    }

    fn inject(&mut self, bit: u8) {
        for r in &mut self.regs {
            *r ^= u32::from(bit & 1);
        }
    }

    /// Loads key and frame with regular clocking, then runs the discarded mixing cycles.
    pub fn setup(key: &[u8; 8], frame: u32) -> (Self, PhaseCounts) {
        let mut a = Self::zeroed();
        let mut counts = PhaseCounts::default();
        for i in 0..KEY_CYCLES {
            a.clock_regular();
            a.inject(key[i / 8] >> (i % 8) & 1);
            counts.loading += 1;
        }
        for i in 0..FRAME_CYCLES {
            a.clock_regular();
            a.inject((frame >> i & 1) as u8);
            counts.loading += 1;
        }
        for _ in 0..MIX_CYCLES {
            a.clock_majority();
            counts.mixing += 1;
        }
        (a, counts)
    }

    pub fn keystream(&mut self, count: usize) -> Vec<u8> {
        (0..count)
            .map(|_| {
                self.clock_majority();
                self.output()
            })
            .collect()
    }

    pub fn advances(&self) -> [u64; 3] {
        self.advances
    }

    pub fn majority_cycles(&self) -> u64 {
        self.majority_cycles
    }
}

pub fn majority(a: u8, b: u8, c: u8) -> u8 {
    (a & b) | (b & c) | (a & c)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct A51Output {
    pub bits: Vec<u8>,
    pub phases: PhaseCounts,
}

impl A51Output {
    /// First 114 bits, packed MSB-first.
    pub fn a_to_b(&self) -> Vec<u8> {
        pack_msb_first(&self.bits[..OUTPUT_BITS / 2])
    }

    /// Last 114 bits, packed MSB-first.
    pub fn b_to_a(&self) -> Vec<u8> {
        pack_msb_first(&self.bits[OUTPUT_BITS / 2..])
    }
}

/// Full run for one frame: 86 loading cycles, 100 discarded, 228 output bits.
pub fn a51_run(key: &[u8; 8], frame: u32) -> A51Output {
    let (mut a, mut phases) = A51::setup(key, frame & 0x3f_ffff);
    let bits = a.keystream(OUTPUT_BITS);
    phases.output = bits.len();
    A51Output { bits, phases }
}

pub fn pack_msb_first(bits: &[u8]) -> Vec<u8> {
    bits.chunks(8)
        .map(|c| c.iter().enumerate().fold(0u8, |acc, (i, &b)| acc | (b & 1) << (7 - i)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const KEY: [u8; 8] = [0x12, 0x23, 0x45, 0x67, 0x89, 0xAB, 0xCD, 0xEF];

    fn hex(v: &[u8]) -> String {
        v.iter().map(|b| format!("{b:02X}")).collect()
    }

    #[test]
    fn reference_frame() {
        let out = a51_run(&KEY, 0x134);
        assert_eq!(hex(&out.a_to_b()), "534EAA582FE8151AB6E1855A728C00");
        assert_eq!(hex(&out.b_to_a()), "24FD35A35D5FB6526D32F906DF1AC0");
        assert_eq!(out.phases, PhaseCounts { loading: 86, mixing: 100, output: 228 });
    }

    #[test]
    fn majority_rule() {
        assert_eq!(majority(0, 0, 1), 0);
        let mut a = A51::zeroed();
        a.set_registers([0, 0, 1 << 10]);
        assert_eq!(a.clock_majority(), [true, true, false]);
    }

    #[test]
    fn packing() {
        assert_eq!(pack_msb_first(&[1, 0, 0, 0, 0, 0, 0, 1, 1]), vec![0x81, 0x80]);
    }
}
