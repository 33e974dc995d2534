"""Text-mode trip planning dialog system with senior-tailored delivery."""

__version__ = "0.1.0"
