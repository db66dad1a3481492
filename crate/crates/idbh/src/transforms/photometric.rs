//! Color-domain transforms: enhancement blends, solarize, and the
//! histogram ops (equalize, autocontrast).
//!
//! The enhancement factors follow the usual convention that 1.0 is the
//! identity and smaller values degrade toward the reference image (grayscale
//! for color, black for brightness, mean gray for contrast, smoothed for
//! sharpness).

use crate::error::{Error, Result};
use crate::image::Image;

const LUMA: [f32; 3] = [0.299, 0.587, 0.114];

fn luma(px: &[f32]) -> f32 {
    if px.len() == 1 {
        px[0]
    } else {
        LUMA[0] * px[0] + LUMA[1] * px[1] + LUMA[2] * px[2]
    }
}

fn blend_with(img: &Image, factor: f32, reference: impl Fn(usize, usize, usize) -> f32) -> Image {
    let (h, w, c) = (img.height(), img.width(), img.channels());
    let mut data = Vec::with_capacity(h * w * c);
    for y in 0..h {
        for x in 0..w {
            for ch in 0..c {
                let r = reference(y, x, ch);
                let v = r + factor * (img.get(y, x, ch) - r);
                data.push(v.clamp(0.0, 1.0));
            }
        }
    }
    Image::from_parts_unchecked(h, w, c, data)
}

/// Blend toward per-pixel grayscale; factor 1 is the identity, 0 is gray.
/// Single-channel images are already gray and pass through unchanged.
pub fn color(img: &Image, factor: f32) -> Image {
    if img.channels() == 1 {
        return img.clone();
    }
    blend_with(img, factor, |y, x, _| luma(img.pixel(y, x)))
}

/// Per-pixel scaling toward black; factor 1 is the identity.
pub fn brightness(img: &Image, factor: f32) -> Image {
    blend_with(img, factor, |_, _, _| 0.0)
}

/// Blend toward the image-wide mean gray level; factor 1 is the identity.
pub fn contrast(img: &Image, factor: f32) -> Image {
    let (h, w) = (img.height(), img.width());
    let mut sum = 0.0f64;
    for y in 0..h {
        for x in 0..w {
            sum += luma(img.pixel(y, x)) as f64;
        }
    }
    let mean = (sum / (h * w) as f64) as f32;
    blend_with(img, factor, |_, _, _| mean)
}

/// Blend toward a 3x3 smoothed copy (kernel 1/13 * [[1,1,1],[1,5,1],[1,1,1]],
/// border pixels kept as-is); factor 1 is the identity.
pub fn sharpness(img: &Image, factor: f32) -> Image {
    let (h, w, c) = (img.height(), img.width(), img.channels());
    let mut smooth = img.data().to_vec();
    if h > 2 && w > 2 {
        for y in 1..h - 1 {
            for x in 1..w - 1 {
                for ch in 0..c {
                    let mut acc = 0.0f32;
                    for dy in 0..3usize {
                        for dx in 0..3usize {
                            let weight = if dy == 1 && dx == 1 { 5.0 } else { 1.0 };
                            acc += weight * img.get(y + dy - 1, x + dx - 1, ch);
                        }
                    }
                    smooth[img.index(y, x, ch)] = acc / 13.0;
                }
            }
        }
    }
    blend_with(img, factor, |y, x, ch| smooth[img.index(y, x, ch)])
}

/// Inverts every value strictly above the threshold; threshold 1.0 is the
/// identity because no value exceeds 1.
pub fn solarize(img: &Image, threshold: f32) -> Image {
    let data = img
        .data()
        .iter()
        .map(|&v| if v > threshold { 1.0 - v } else { v })
        .collect();
    Image::from_parts_unchecked(img.height(), img.width(), img.channels(), data)
}

/// Quantizes a channel value onto the 256-level grid used by the histogram ops.
#[inline]
pub fn quantize255(v: f32) -> usize {
    (v * 255.0).round().clamp(0.0, 255.0) as usize
}

/// Histogram equalization, channel by channel, on 256 quantized levels.
///
/// The remap table spreads the cumulative histogram across the level range:
/// with `step = (pixels - count(last occupied level)) / 255`, level `i` maps
/// to `(step/2 + cumulative count below i) / step`. A degenerate histogram
/// (step 0) leaves the channel unchanged.
pub fn equalize(img: &Image) -> Image {
    let (h, w, c) = (img.height(), img.width(), img.channels());
    let mut out = img.data().to_vec();
    for ch in 0..c {
        let mut hist = [0u64; 256];
        for y in 0..h {
            for x in 0..w {
                hist[quantize255(img.get(y, x, ch))] += 1;
            }
        }
        let total: u64 = hist.iter().sum();
        let last_occupied = hist.iter().rev().find(|&&n| n > 0).copied().unwrap_or(0);
        let step = (total - last_occupied) / 255;
        if step == 0 {
            continue;
        }
        let mut lut = [0u8; 256];
        let mut n = step / 2;
        for (i, entry) in lut.iter_mut().enumerate() {
            *entry = (n / step).min(255) as u8;
            n += hist[i];
        }
        for y in 0..h {
            for x in 0..w {
                let idx = img.index(y, x, ch);
                out[idx] = lut[quantize255(img.get(y, x, ch))] as f32 / 255.0;
            }
        }
    }
    Image::from_parts_unchecked(h, w, c, out)
}

/// Remaps each channel so its minimum hits 0 and its maximum hits 1; constant
/// channels are left unchanged.
pub fn autocontrast(img: &Image) -> Image {
    let (h, w, c) = (img.height(), img.width(), img.channels());
    let mut out = img.data().to_vec();
    for ch in 0..c {
        let mut lo = f32::INFINITY;
        let mut hi = f32::NEG_INFINITY;
        for y in 0..h {
            for x in 0..w {
                let v = img.get(y, x, ch);
                lo = lo.min(v);
                hi = hi.max(v);
            }
        }
        if hi <= lo {
            continue;
        }
        let scale = 1.0 / (hi - lo);
        for y in 0..h {
            for x in 0..w {
                let idx = img.index(y, x, ch);
                out[idx] = ((img.get(y, x, ch) - lo) * scale).clamp(0.0, 1.0);
            }
        }
    }
    Image::from_parts_unchecked(h, w, c, out)
}

/// Validates an enhancement/solarize strength against its legal range.
pub fn check_factor(name: &str, value: f32, lo: f32, hi: f32) -> Result<()> {
    if !value.is_finite() || value < lo || value > hi {
        return Err(Error::InvalidArgument(format!(
            "{name} strength {value} outside [{lo}, {hi}]"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::RngStream;

    fn random_image(seed: u64, h: usize, w: usize, c: usize) -> Image {
        let mut rng = RngStream::new(seed, 17);
        Image::from_fn(h, w, c, |_, _, _| rng.uniform() as f32).unwrap()
    }

    #[test]
    fn factor_one_is_identity() {
        let img = random_image(1, 8, 8, 3);
        assert_eq!(color(&img, 1.0), img);
        assert_eq!(brightness(&img, 1.0), img);
        // contrast/sharpness at factor 1 blend fully back to the original
        assert_eq!(contrast(&img, 1.0), img);
        assert_eq!(sharpness(&img, 1.0), img);
    }

    #[test]
    fn brightness_matches_per_pixel_oracle() {
        let img = random_image(2, 6, 5, 3);
        let factor = 0.62;
        let out = brightness(&img, factor);
        for (o, v) in out.data().iter().zip(img.data()) {
            assert_eq!(*o, (v * factor).clamp(0.0, 1.0));
        }
    }

    #[test]
    fn solarize_threshold_one_is_identity() {
        let img = random_image(3, 4, 4, 1);
        assert_eq!(solarize(&img, 1.0), img);
        let out = solarize(&img, 0.5);
        for (o, v) in out.data().iter().zip(img.data()) {
            if *v > 0.5 {
                assert_eq!(*o, 1.0 - v);
            } else {
                assert_eq!(o, v);
            }
        }
    }

    #[test]
    fn color_strength_zero_is_grayscale() {
        let img = random_image(4, 4, 4, 3);
        let out = color(&img, 0.0);
        for y in 0..4 {
            for x in 0..4 {
                let px = out.pixel(y, x);
                assert!((px[0] - px[1]).abs() < 1e-6);
                assert!((px[1] - px[2]).abs() < 1e-6);
            }
        }
    }

    // Independent naive reference: literal cumulative-histogram translation.
    fn equalize_reference(img: &Image) -> Image {
        let (h, w, c) = (img.height(), img.width(), img.channels());
        let mut out = img.data().to_vec();
        for ch in 0..c {
            let mut hist = vec![0u64; 256];
            for y in 0..h {
                for x in 0..w {
                    hist[quantize255(img.get(y, x, ch))] += 1;
                }
            }
            let occupied: Vec<u64> = hist.iter().copied().filter(|&n| n > 0).collect();
            if occupied.len() <= 1 {
                continue;
            }
            let step = (occupied.iter().sum::<u64>() - occupied[occupied.len() - 1]) / 255;
            if step == 0 {
                continue;
            }
            let mut lut = vec![0u8; 256];
            let mut n = step / 2;
            for i in 0..256 {
                lut[i] = (n / step).min(255) as u8;
                n += hist[i];
            }
            for y in 0..h {
                for x in 0..w {
                    let idx = img.index(y, x, ch);
                    out[idx] = lut[quantize255(img.get(y, x, ch))] as f32 / 255.0;
                }
            }
        }
        Image::from_parts_unchecked(h, w, c, out)
    }

    fn autocontrast_reference(img: &Image) -> Image {
        let (h, w, c) = (img.height(), img.width(), img.channels());
        let mut out = img.data().to_vec();
        for ch in 0..c {
            let mut values = Vec::new();
            for y in 0..h {
                for x in 0..w {
                    values.push(img.get(y, x, ch));
                }
            }
            let lo = values.iter().copied().fold(f32::INFINITY, f32::min);
            let hi = values.iter().copied().fold(f32::NEG_INFINITY, f32::max);
            if hi <= lo {
                continue;
            }
            let scale = 1.0 / (hi - lo);
            for y in 0..h {
                for x in 0..w {
                    let idx = img.index(y, x, ch);
                    out[idx] = ((img.get(y, x, ch) - lo) * scale).clamp(0.0, 1.0);
                }
            }
        }
        Image::from_parts_unchecked(h, w, c, out)
    }

    #[test]
    fn histogram_ops_match_naive_reference() {
        for seed in 0..20 {
            let img = random_image(seed, 12, 9, 3);
            assert_eq!(equalize(&img), equalize_reference(&img), "equalize seed {seed}");
            assert_eq!(
                autocontrast(&img),
                autocontrast_reference(&img),
                "autocontrast seed {seed}"
            );
        }
    }

    #[test]
    fn equalize_constant_image_unchanged() {
        let img = Image::filled(5, 5, 1, 0.4).unwrap();
        assert_eq!(equalize(&img), img);
        assert_eq!(autocontrast(&img), img);
    }
}
