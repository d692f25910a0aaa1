//! Textbook AES-128-GCM, used as the correctness oracle.
//!
//! The S-box is computed from the field definition (brute-force inverse plus
//! the affine map), GHASH is the shift-and-conditionally-xor loop straight
//! from the mode definition, and CTR is assembled block by block. Quadratic
//! and slow; only suitable for test-sized inputs.

fn gf_mul(mut a: u8, mut b: u8) -> u8 {
    let mut acc = 0u8;
    while b != 0 {
        if b & 1 != 0 {
            acc ^= a;
        }
        let hi = a & 0x80;
        a <<= 1;
        if hi != 0 {
            a ^= 0x1b;
        }
        b >>= 1;
    }
    acc
}

fn compute_sbox() -> [u8; 256] {
    let mut s = [0u8; 256];
    for x in 0..=255u8 {
        let inv = if x == 0 {
            0
        } else {
            (1..=255u8).find(|&c| gf_mul(x, c) == 1).unwrap()
        };
        let mut out = inv;
        let mut r = inv;
        for _ in 0..4 {
            r = r.rotate_left(1);
            out ^= r;
        }
        s[x as usize] = out ^ 0x63;
    }
    s
}

pub struct RefAes {
    sbox: [u8; 256],
    round_keys: [[u8; 16]; 11],
}

impl RefAes {
    pub fn new(key: &[u8; 16]) -> Self {
        let sbox = compute_sbox();
        let mut w = [[0u8; 4]; 44];
        for i in 0..4 {
            w[i].copy_from_slice(&key[4 * i..4 * i + 4]);
        }
        let mut rcon = 1u8;
        for i in 4..44 {
            let mut t = w[i - 1];
            if i % 4 == 0 {
                t.rotate_left(1);
                for b in &mut t {
                    *b = sbox[*b as usize];
                }
                t[0] ^= rcon;
                rcon = gf_mul(rcon, 2);
            }
            for j in 0..4 {
                w[i][j] = w[i - 4][j] ^ t[j];
            }
        }
        let mut round_keys = [[0u8; 16]; 11];
        for r in 0..11 {
            for c in 0..4 {
                round_keys[r][4 * c..4 * c + 4].copy_from_slice(&w[4 * r + c]);
            }
        }
        RefAes { sbox, round_keys }
    }

    pub fn encrypt_block(&self, block: &[u8; 16]) -> [u8; 16] {
        let mut s = *block;
        xor16(&mut s, &self.round_keys[0]);
        for round in 1..=10 {
            for b in &mut s {
                *b = self.sbox[*b as usize];
            }
            s = shift_rows(&s);
            if round != 10 {
                s = mix_columns(&s);
            }
            xor16(&mut s, &self.round_keys[round]);
        }
        s
    }
}

fn xor16(a: &mut [u8; 16], b: &[u8; 16]) {
    for i in 0..16 {
        a[i] ^= b[i];
    }
}

// State is column-major: byte i sits at row i % 4, column i / 4.
fn shift_rows(s: &[u8; 16]) -> [u8; 16] {
    let mut out = [0u8; 16];
    for r in 0..4 {
        for c in 0..4 {
            out[r + 4 * c] = s[r + 4 * ((c + r) % 4)];
        }
    }
    out
}

fn mix_columns(s: &[u8; 16]) -> [u8; 16] {
    let mut out = [0u8; 16];
    for c in 0..4 {
        let col = &s[4 * c..4 * c + 4];
        for r in 0..4 {
            out[4 * c + r] = gf_mul(col[r], 2)
                ^ gf_mul(col[(r + 1) % 4], 3)
                ^ col[(r + 2) % 4]
                ^ col[(r + 3) % 4];
        }
    }
    out
}

/// GF(2^128) product in the GCM bit ordering: Z starts at zero, V starts at
/// `y`, and each bit of `x` (leftmost first) conditionally accumulates V
/// before V is shifted right with the 0xe1 reduction fed into the top byte.
pub fn ghash_mul(x: &[u8; 16], y: &[u8; 16]) -> [u8; 16] {
    let mut z = [0u8; 16];
    let mut v = *y;
    for i in 0..128 {
        if x[i / 8] & (0x80 >> (i % 8)) != 0 {
            xor16(&mut z, &v);
        }
        let lsb = v[15] & 1;
        for j in (1..16).rev() {
            v[j] = (v[j] >> 1) | (v[j - 1] << 7);
        }
        v[0] >>= 1;
        if lsb != 0 {
            v[0] ^= 0xe1;
        }
    }
    z
}

fn ghash(h: &[u8; 16], aad: &[u8], ct: &[u8]) -> [u8; 16] {
    let mut y = [0u8; 16];
    let mut absorb = |data: &[u8]| {
        for chunk in data.chunks(16) {
            let mut block = [0u8; 16];
            block[..chunk.len()].copy_from_slice(chunk);
            xor16(&mut y, &block);
            y = ghash_mul(&y, h);
        }
    };
    absorb(aad);
    absorb(ct);
    let mut lens = [0u8; 16];
    lens[..8].copy_from_slice(&(aad.len() as u64 * 8).to_be_bytes());
    lens[8..].copy_from_slice(&(ct.len() as u64 * 8).to_be_bytes());
    xor16(&mut y, &lens);
    ghash_mul(&y, h)
}

fn counter_block(iv: &[u8; 12], ctr: u32) -> [u8; 16] {
    let mut block = [0u8; 16];
    block[..12].copy_from_slice(iv);
    block[12..].copy_from_slice(&ctr.to_be_bytes());
    block
}

pub fn gcm_encrypt(key: &[u8; 16], iv: &[u8; 12], aad: &[u8], pt: &[u8]) -> (Vec<u8>, [u8; 16]) {
    let aes = RefAes::new(key);
    let h = aes.encrypt_block(&[0u8; 16]);
    let mut ct = Vec::with_capacity(pt.len());
    let mut ctr = 2u32;
    for chunk in pt.chunks(16) {
        let ks = aes.encrypt_block(&counter_block(iv, ctr));
        ctr = ctr.wrapping_add(1);
        for (i, b) in chunk.iter().enumerate() {
            ct.push(b ^ ks[i]);
        }
    }
    let mut tag = ghash(&h, aad, &ct);
    let j0 = aes.encrypt_block(&counter_block(iv, 1));
    xor16(&mut tag, &j0);
    (ct, tag)
}

pub fn gcm_decrypt(
    key: &[u8; 16],
    iv: &[u8; 12],
    aad: &[u8],
    ct: &[u8],
    tag: &[u8; 16],
) -> Option<Vec<u8>> {
    let aes = RefAes::new(key);
    let h = aes.encrypt_block(&[0u8; 16]);
    let mut expect = ghash(&h, aad, ct);
    let j0 = aes.encrypt_block(&counter_block(iv, 1));
    xor16(&mut expect, &j0);
    if expect != *tag {
        return None;
    }
    let mut pt = Vec::with_capacity(ct.len());
    let mut ctr = 2u32;
    for chunk in ct.chunks(16) {
        let ks = aes.encrypt_block(&counter_block(iv, ctr));
        ctr = ctr.wrapping_add(1);
        for (i, b) in chunk.iter().enumerate() {
            pt.push(b ^ ks[i]);
        }
    }
    Some(pt)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::unhex;
    use crate::vectors::GCM_KATS;

    #[test]
    fn sbox_matches_published_corners() {
        let s = compute_sbox();
        assert_eq!(s[0x00], 0x63);
        assert_eq!(s[0x01], 0x7c);
        assert_eq!(s[0x53], 0xed);
        assert_eq!(s[0xff], 0x16);
    }

    #[test]
    fn aes_core_matches_fips_vector() {
        let key = [0u8; 16];
        let aes = RefAes::new(&key);
        let out = aes.encrypt_block(&[0u8; 16]);
        assert_eq!(
            out.to_vec(),
            unhex("66e94bd4ef8a2c3b884cfa59ca342b2e")
        );
    }

    #[test]
    fn agrees_with_external_vectors() {
        for kat in GCM_KATS {
            let key: [u8; 16] = unhex(kat.key).try_into().unwrap();
            let iv: [u8; 12] = unhex(kat.iv).try_into().unwrap();
            let aad = unhex(kat.aad);
            let pt = unhex(kat.pt);
            let (ct, tag) = gcm_encrypt(&key, &iv, &aad, &pt);
            assert_eq!(hex::encode(&ct), kat.ct);
            assert_eq!(hex::encode(tag), kat.tag);
            let back = gcm_decrypt(&key, &iv, &aad, &ct, &tag).unwrap();
            assert_eq!(back, pt);
        }
    }

    #[test]
    fn tamper_fails_closed() {
        let key = [7u8; 16];
        let iv = [9u8; 12];
        let (mut ct, tag) = gcm_encrypt(&key, &iv, b"aad", b"hello world 1234");
        ct[3] ^= 1;
        assert!(gcm_decrypt(&key, &iv, b"aad", &ct, &tag).is_none());
        let (ct, tag) = gcm_encrypt(&key, &iv, b"aad", b"hello world 1234");
        assert!(gcm_decrypt(&key, &iv, b"wrong", &ct, &tag).is_none());
    }
}
