//! Bit-at-a-time CRC-32 with the reflected polynomial `0xEDB8_8320`,
//! initial state and final xor `0xFFFF_FFFF`. With no input the digest is
//! `0x0000_0000`.

const POLY: u32 = 0xEDB8_8320;

#[derive(Debug, Clone)]
pub struct Crc32 {
    state: u32,
}

impl Crc32 {
    pub fn new() -> Self {
        Crc32 { state: 0xFFFF_FFFF }
    }

    pub fn update_byte(&mut self, byte: u8) {
        self.state ^= u32::from(byte);
        for _ in 0..8 {
            let lsb = self.state & 1;
            self.state >>= 1;
            if lsb != 0 {
                self.state ^= POLY;
            }
        }
    }

    pub fn update_bytes(&mut self, bytes: &[u8]) {
        for &byte in bytes {
            self.update_byte(byte);
        }
    }

    /// Feed the UTF-8 encoding of `c`.
    pub fn update_char(&mut self, c: char) {
        let mut buf = [0u8; 4];
        self.update_bytes(c.encode_utf8(&mut buf).as_bytes());
    }

    pub fn value(&self) -> u32 {
        !self.state
    }
}

impl Default for Crc32 {
    fn default() -> Self {
        Crc32::new()
    }
}
