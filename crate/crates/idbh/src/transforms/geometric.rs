//! Spatial transforms: flip, shear, translate, rotate, and padcrop.
//!
//! Shear and rotation act about the image center. All strength parameters
//! are magnitudes; callers choose the sign (the `Random` sampling mode draws
//! it uniformly).

use crate::error::{Error, Result};
use crate::image::Image;
use crate::resample::{resample, AffineMap, Interp};
use crate::rng::RngStream;

/// Mirrors the image left-right. Applying it twice is a bit-exact identity.
pub fn horizontal_flip(img: &Image) -> Image {
    let (h, w, c) = (img.height(), img.width(), img.channels());
    let mut data = Vec::with_capacity(h * w * c);
    for y in 0..h {
        for x in 0..w {
            data.extend_from_slice(img.pixel(y, w - 1 - x));
        }
    }
    Image::from_parts_unchecked(h, w, c, data)
}

fn center(img: &Image) -> (f32, f32) {
    (
        (img.width() as f32 - 1.0) / 2.0,
        (img.height() as f32 - 1.0) / 2.0,
    )
}

/// Horizontal shear by tangent `factor` about the center.
pub fn shear_x(img: &Image, factor: f32, interp: Interp, fill: &[f32]) -> Result<Image> {
    let (_, cy) = center(img);
    // forward: x' = x + factor * (y - cy); inverse solves for x
    let map = AffineMap([1.0, -factor, factor * cy, 0.0, 1.0, 0.0]);
    resample(img, &map, interp, fill)
}

/// Vertical shear by tangent `factor` about the center.
pub fn shear_y(img: &Image, factor: f32, interp: Interp, fill: &[f32]) -> Result<Image> {
    let (cx, _) = center(img);
    let map = AffineMap([1.0, 0.0, 0.0, -factor, 1.0, factor * cx]);
    resample(img, &map, interp, fill)
}

/// Horizontal translation by `pixels` (positive moves content right).
pub fn translate_x(img: &Image, pixels: f32, interp: Interp, fill: &[f32]) -> Result<Image> {
    let map = AffineMap([1.0, 0.0, -pixels, 0.0, 1.0, 0.0]);
    resample(img, &map, interp, fill)
}

/// Vertical translation by `pixels` (positive moves content down).
pub fn translate_y(img: &Image, pixels: f32, interp: Interp, fill: &[f32]) -> Result<Image> {
    let map = AffineMap([1.0, 0.0, 0.0, 0.0, 1.0, -pixels]);
    resample(img, &map, interp, fill)
}

/// Rotation by `degrees` counterclockwise about the center.
pub fn rotate(img: &Image, degrees: f32, interp: Interp, fill: &[f32]) -> Result<Image> {
    let theta = degrees.to_radians();
    let (s, c) = theta.sin_cos();
    let (cx, cy) = center(img);
    // inverse rotation about (cx, cy)
    let map = AffineMap([
        c,
        -s,
        cx - c * cx + s * cy,
        s,
        c,
        cy - s * cx - c * cy,
    ]);
    resample(img, &map, interp, fill)
}

/// Pads every edge by `pad` with fill, then crops back to the original size
/// at the given offset in the padded frame. Offset `(pad, pad)` is the
/// centered crop (identity).
pub fn padcrop_at(img: &Image, pad: usize, ox: usize, oy: usize, fill: &[f32]) -> Result<Image> {
    if fill.len() != img.channels() {
        return Err(Error::InvalidArgument(format!(
            "padcrop: fill length {} != channels {}",
            fill.len(),
            img.channels()
        )));
    }
    if ox > 2 * pad || oy > 2 * pad {
        return Err(Error::InvalidArgument(format!(
            "padcrop: offset ({ox}, {oy}) outside [0, {}]^2",
            2 * pad
        )));
    }
    let (h, w, c) = (img.height(), img.width(), img.channels());
    let mut data = Vec::with_capacity(h * w * c);
    let pad = pad as i64;
    for y in 0..h {
        for x in 0..w {
            let sy = oy as i64 + y as i64 - pad;
            let sx = ox as i64 + x as i64 - pad;
            if sx >= 0 && (sx as usize) < w && sy >= 0 && (sy as usize) < h {
                data.extend_from_slice(img.pixel(sy as usize, sx as usize));
            } else {
                data.extend_from_slice(fill);
            }
        }
    }
    Ok(Image::from_parts_unchecked(h, w, c, data))
}

/// Padcrop with the crop offset drawn uniformly over `[0, 2*pad]^2`.
pub fn padcrop(img: &Image, pad: usize, rng: &mut RngStream, fill: &[f32]) -> Result<Image> {
    if pad == 0 {
        return Ok(img.clone());
    }
    let ox = rng.uniform_int(0, 2 * pad as i64)? as usize;
    let oy = rng.uniform_int(0, 2 * pad as i64)? as usize;
    padcrop_at(img, pad, ox, oy, fill)
}
