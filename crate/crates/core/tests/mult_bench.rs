use std::time::Instant;
use mahler_zero::bipoly::BiPoly;
use mahler_zero::poly::Poly;
use mahler_zero::rat::{rat_int, Rat};

fn random_bipoly(seed: &mut u64, deg_x: usize, deg_z: usize, bits: u32) -> BiPoly {
    let mut next = || {
        *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (*seed >> 33) as i64
    };
    let mask = (1i64 << bits) - 1;
    BiPoly::new(
        (0..=deg_x)
            .map(|_| Poly::new((0..=deg_z).map(|_| rat_int((next() & mask) - (mask / 2))).collect()))
            .collect(),
    )
}

#[test]
fn mult_speed() {
    let mut seed = 42u64;
    for (dx, dz, bits) in [(8usize, 60usize, 20u32), (15, 150, 40), (20, 200, 60)] {
        let a = random_bipoly(&mut seed, dx, dz, bits);
        let b = random_bipoly(&mut seed, dx, dz, bits);
        let t0 = Instant::now();
        let c = a.mul(&b);
        eprintln!("mul deg_x={} deg_z={} bits={}: {:?} (out deg_z {:?})", dx, dz, bits, t0.elapsed(), c.deg_z());
        let t0 = Instant::now();
        let d = {use mahler_zero::resultant::Ring; c.exact_div(&a)};
        eprintln!("  exact_div back: {:?}", t0.elapsed());
        assert_eq!(d, b);
    }
}
