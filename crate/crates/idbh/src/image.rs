//! Image and dataset containers.
//!
//! An [`Image`] is a dense `height x width x channels` grid of `f32` values
//! in `[0, 1]`, stored row-major with interleaved channels. All transforms in
//! this crate consume and produce this type; 8-bit sources are divided by 255
//! on load so augmentation and gradients share one numeric domain.

use crate::error::{Error, Result};

/// Dense H x W x C pixel grid with values in `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Image {
    height: usize,
    width: usize,
    channels: usize,
    data: Vec<f32>,
}

impl Image {
    /// Builds an image from raw interleaved data, validating the invariants:
    /// `data.len() == h * w * c`, channels 1 or 3, every value in `[0, 1]`.
    pub fn new(height: usize, width: usize, channels: usize, data: Vec<f32>) -> Result<Self> {
        if channels != 1 && channels != 3 {
            return Err(Error::InvalidArgument(format!(
                "image must have 1 or 3 channels, got {channels}"
            )));
        }
        if height == 0 || width == 0 {
            return Err(Error::InvalidArgument("image dimensions must be non-zero".into()));
        }
        if data.len() != height * width * channels {
            return Err(Error::InvalidArgument(format!(
                "data length {} does not match {height}x{width}x{channels}",
                data.len()
            )));
        }
        if let Some(v) = data.iter().find(|v| !v.is_finite() || **v < 0.0 || **v > 1.0) {
            return Err(Error::InvalidArgument(format!(
                "pixel value {v} outside [0, 1]"
            )));
        }
        Ok(Image {
            height,
            width,
            channels,
            data,
        })
    }

    /// Constant-valued image.
    pub fn filled(height: usize, width: usize, channels: usize, value: f32) -> Result<Self> {
        Image::new(height, width, channels, vec![value; height * width * channels])
    }

    pub fn zeros(height: usize, width: usize, channels: usize) -> Result<Self> {
        Image::filled(height, width, channels, 0.0)
    }

    /// Converts 8-bit interleaved samples by dividing by 255.
    pub fn from_u8(height: usize, width: usize, channels: usize, bytes: &[u8]) -> Result<Self> {
        let data = bytes.iter().map(|&b| b as f32 / 255.0).collect();
        Image::new(height, width, channels, data)
    }

    /// Quantizes back to 8-bit by rounding `v * 255`.
    pub fn to_u8(&self) -> Vec<u8> {
        self.data
            .iter()
            .map(|v| (v * 255.0).round().clamp(0.0, 255.0) as u8)
            .collect()
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn channels(&self) -> usize {
        self.channels
    }

    pub fn data(&self) -> &[f32] {
        &self.data
    }

    #[inline]
    pub fn index(&self, y: usize, x: usize, c: usize) -> usize {
        (y * self.width + x) * self.channels + c
    }

    #[inline]
    pub fn get(&self, y: usize, x: usize, c: usize) -> f32 {
        self.data[(y * self.width + x) * self.channels + c]
    }

    /// All channel values at one pixel.
    #[inline]
    pub fn pixel(&self, y: usize, x: usize) -> &[f32] {
        let i = (y * self.width + x) * self.channels;
        &self.data[i..i + self.channels]
    }

    /// Consumes the image, returning the raw interleaved buffer.
    pub fn into_data(self) -> Vec<f32> {
        self.data
    }

    /// Same-shape image from a closure over `(y, x, c)`; values are clamped.
    pub fn from_fn(
        height: usize,
        width: usize,
        channels: usize,
        mut f: impl FnMut(usize, usize, usize) -> f32,
    ) -> Result<Self> {
        let mut data = Vec::with_capacity(height * width * channels);
        for y in 0..height {
            for x in 0..width {
                for c in 0..channels {
                    data.push(f(y, x, c).clamp(0.0, 1.0));
                }
            }
        }
        Image::new(height, width, channels, data)
    }

    /// Internal constructor for code that has already established the
    /// invariants; panics in debug builds if they are violated.
    pub(crate) fn from_parts_unchecked(
        height: usize,
        width: usize,
        channels: usize,
        data: Vec<f32>,
    ) -> Self {
        debug_assert_eq!(data.len(), height * width * channels);
        debug_assert!(data.iter().all(|v| (0.0..=1.0).contains(v)));
        Image {
            height,
            width,
            channels,
            data,
        }
    }

    pub(crate) fn data_mut(&mut self) -> &mut [f32] {
        &mut self.data
    }
}

/// Clips every value into `[0, 1]`.
pub fn clamp01(img: &Image) -> Image {
    let data = img.data.iter().map(|v| v.clamp(0.0, 1.0)).collect();
    Image::from_parts_unchecked(img.height, img.width, img.channels, data)
}

/// A labelled set of equally-sized images.
#[derive(Debug, Clone)]
pub struct Dataset {
    pub images: Vec<Image>,
    pub labels: Vec<usize>,
    pub class_count: usize,
}

impl Dataset {
    pub fn new(images: Vec<Image>, labels: Vec<usize>, class_count: usize) -> Result<Self> {
        if images.len() != labels.len() {
            return Err(Error::InvalidArgument(format!(
                "{} images but {} labels",
                images.len(),
                labels.len()
            )));
        }
        if let Some(l) = labels.iter().find(|&&l| l >= class_count) {
            return Err(Error::InvalidArgument(format!(
                "label {l} out of range for {class_count} classes"
            )));
        }
        if let Some(first) = images.first() {
            let dims = (first.height(), first.width(), first.channels());
            if images
                .iter()
                .any(|i| (i.height(), i.width(), i.channels()) != dims)
            {
                return Err(Error::InvalidArgument(
                    "dataset images must share dimensions".into(),
                ));
            }
        }
        Ok(Dataset {
            images,
            labels,
            class_count,
        })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// (height, width, channels) of the images, or an error when empty.
    pub fn dims(&self) -> Result<(usize, usize, usize)> {
        self.images
            .first()
            .map(|i| (i.height(), i.width(), i.channels()))
            .ok_or_else(|| Error::InvalidArgument("empty dataset".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariants_enforced() {
        assert!(Image::new(2, 2, 3, vec![0.0; 12]).is_ok());
        assert!(Image::new(2, 2, 2, vec![0.0; 8]).is_err());
        assert!(Image::new(2, 2, 1, vec![0.0; 3]).is_err());
        assert!(Image::new(1, 1, 1, vec![1.2]).is_err());
        assert!(Image::new(1, 1, 1, vec![-0.3]).is_err());
    }

    #[test]
    fn clamp01_clips_out_of_range() {
        let img = Image {
            height: 1,
            width: 3,
            channels: 1,
            data: vec![1.2, -0.3, 0.5],
        };
        let clamped = clamp01(&img);
        assert_eq!(clamped.data(), &[1.0, 0.0, 0.5]);
        let ok = Image::new(1, 3, 1, vec![0.1, 0.9, 1.0]).unwrap();
        assert_eq!(clamp01(&ok), ok);
    }

    #[test]
    fn u8_round_trip() {
        let bytes: Vec<u8> = (0..=255).collect();
        let img = Image::from_u8(16, 16, 1, &bytes).unwrap();
        assert_eq!(img.to_u8(), bytes);
    }

    #[test]
    fn dataset_validation() {
        let img = Image::zeros(2, 2, 1).unwrap();
        assert!(Dataset::new(vec![img.clone()], vec![0], 2).is_ok());
        assert!(Dataset::new(vec![img.clone()], vec![2], 2).is_err());
        assert!(Dataset::new(vec![img.clone()], vec![], 2).is_err());
        let other = Image::zeros(3, 2, 1).unwrap();
        assert!(Dataset::new(vec![img, other], vec![0, 0], 2).is_err());
    }
}
