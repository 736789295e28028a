from setuptools import setup, find_packages

setup(
    name="kicked_top",
    version="0.1.0",
    packages=find_packages(exclude=["test", "test.*"]),
    install_requires=[
        "pandas>=1.5.0",
        "numpy>=1.20.0",
        "scipy>=1.7.0",
        "sympy>=1.9",
        "click>=8.0.0",
        "tqdm>=4.65.0",
    ],
    extras_require={
        "test": [
            "pytest>=7.0",
            "hypothesis>=6.0",
        ],
    },
    entry_points={
    'console_scripts': [
        'ktop=kicked_top.cli:cli',
    ],

    },
    description="Kicked top dynamics: Floquet matrices, P-representation moment propagators and the classical sphere map",
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Physics",
    ],
    python_requires=">=3.8",
)
