from setuptools import setup, find_packages

setup(
    name="proxylight",
    version="1.0.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    install_requires=[
        "numpy>=1.24.0",
        "pillow>=10.0.0",
        "pandas>=1.5.0",
        "pyyaml>=6.0",
        "tqdm>=4.65.0"
    ],
    extras_require={
        "test": ["pytest>=7.0.0"],
    },
    entry_points={
        "console_scripts": [
            "proxylight=src.presentation.cli:main",
        ],
    },
    python_requires=">=3.10",
)
