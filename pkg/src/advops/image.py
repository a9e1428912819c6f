"""RGB image container used throughout the toolkit.

Pixels are stored as float64 intensities in [0, 1], shape (height, width, 3).
All processing stays in floating point; quantization to 8 bits happens only
at codec boundaries (JPEG/PNG encode, the wire protocol) via ``to_u8``.
"""

import io

import numpy as np
from PIL import Image as PILImage, UnidentifiedImageError

from .errors import ValidationError

# Operations and attacks require at least this many pixels per side on their
# inputs; downscaled outputs may be smaller (backends resize as needed).
MIN_INPUT_SIDE = 8


class Image:
    """Immutable RGB image with float pixels in [0, 1]."""

    __slots__ = ("pixels",)

    def __init__(self, pixels: np.ndarray):
        arr = np.asarray(pixels, dtype=np.float64)
        if arr.ndim != 3 or arr.shape[2] != 3:
            raise ValidationError(f"expected (H, W, 3) pixels, got shape {arr.shape}")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValidationError(f"zero-sized image: shape {arr.shape}")
        if not np.isfinite(arr).all():
            raise ValidationError("non-finite pixel intensities")
        if arr.min() < 0.0 or arr.max() > 1.0:
            raise ValidationError(
                f"intensities outside [0, 1]: min={arr.min()}, max={arr.max()}"
            )
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "pixels", arr)

    def __setattr__(self, name, value):
        raise AttributeError("Image is immutable")

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def channels(self) -> int:
        return 3

    def check_min_size(self) -> "Image":
        """Raise unless both sides are at least MIN_INPUT_SIDE pixels."""
        if self.height < MIN_INPUT_SIDE or self.width < MIN_INPUT_SIDE:
            raise ValidationError(
                f"image {self.width}x{self.height} below the "
                f"{MIN_INPUT_SIDE}-pixel minimum side"
            )
        return self

    def to_u8(self) -> np.ndarray:
        """8-bit quantized view (round half up after scaling by 255)."""
        return np.floor(self.pixels * 255.0 + 0.5).clip(0, 255).astype(np.uint8)

    @classmethod
    def from_u8(cls, arr: np.ndarray) -> "Image":
        arr = np.asarray(arr)
        if arr.dtype != np.uint8:
            raise ValidationError(f"expected uint8 array, got {arr.dtype}")
        return cls(arr.astype(np.float64) / 255.0)

    @classmethod
    def from_bytes(cls, data: bytes) -> "Image":
        """Decode an encoded image (PNG, JPEG, ...) from raw bytes."""
        try:
            with PILImage.open(io.BytesIO(data)) as im:
                rgb = im.convert("RGB")
                return cls.from_u8(np.asarray(rgb))
        except (UnidentifiedImageError, OSError) as e:
            raise ValidationError(f"cannot decode image bytes: {e}") from e

    @classmethod
    def from_file(cls, path) -> "Image":
        with open(path, "rb") as f:
            return cls.from_bytes(f.read())

    def to_png_bytes(self) -> bytes:
        buf = io.BytesIO()
        PILImage.fromarray(self.to_u8(), "RGB").save(buf, format="PNG")
        return buf.getvalue()

    def __eq__(self, other):
        return isinstance(other, Image) and np.array_equal(self.pixels, other.pixels)

    def __repr__(self):
        return f"Image({self.width}x{self.height})"


def psnr_db(a: Image, b: Image) -> float:
    """Peak signal-to-noise ratio in dB; inf for identical images."""
    if a.pixels.shape != b.pixels.shape:
        raise ValidationError("PSNR requires equal shapes")
    mse = float(np.mean((a.pixels - b.pixels) ** 2))
    if mse == 0.0:
        return float("inf")
    return float(10.0 * np.log10(1.0 / mse))


def bilinear_resize(pixels: np.ndarray, out_h: int, out_w: int) -> np.ndarray:
    """Bilinear resize of an (H, W, 3) float array, half-pixel-center convention."""
    in_h, in_w = pixels.shape[:2]
    if out_h < 1 or out_w < 1:
        raise ValidationError("resize target must be at least 1x1")
    if (out_h, out_w) == (in_h, in_w):
        return pixels.copy()
    ys = (np.arange(out_h) + 0.5) * (in_h / out_h) - 0.5
    xs = (np.arange(out_w) + 0.5) * (in_w / out_w) - 0.5
    yy, xx = np.meshgrid(ys, xs, indexing="ij")
    return _sample_bilinear(pixels, yy, xx)


def _sample_bilinear(pixels: np.ndarray, ys: np.ndarray, xs: np.ndarray) -> np.ndarray:
    """Sample (H, W, 3) pixels at fractional coordinates, clamping to edges."""
    in_h, in_w = pixels.shape[:2]
    ys = np.clip(ys, 0.0, in_h - 1.0)
    xs = np.clip(xs, 0.0, in_w - 1.0)
    y0 = np.floor(ys).astype(np.int64)
    x0 = np.floor(xs).astype(np.int64)
    y1 = np.minimum(y0 + 1, in_h - 1)
    x1 = np.minimum(x0 + 1, in_w - 1)
    wy = (ys - y0)[..., None]
    wx = (xs - x0)[..., None]
    top = pixels[y0, x0] * (1.0 - wx) + pixels[y0, x1] * wx
    bot = pixels[y1, x0] * (1.0 - wx) + pixels[y1, x1] * wx
    return top * (1.0 - wy) + bot * wy
