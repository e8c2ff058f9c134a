from setuptools import setup, find_packages

setup(
    name="pypaq",
    version="1.0.0",
    packages=find_packages(exclude=["tests", "tests.*"]),

    # Project uses reStructuredText, so ensure that the docutils get
    # installed or upgraded on the target machine
    install_requires=["docutils>=0.3",
                      "numpy>=1.18",
                      "numba>=0.48",
                      "scipy>=1.4.1",
                      "sympy>=1.6"],
    extras_require={
        "test": ["pytest>=6", "hypothesis>=5"],
    },
    python_requires=">=3.8, <4",
    package_data={
        # If any package contains *.txt or *.rst files, include them:
        "": ["*.txt", "*.rst"],
    },
    entry_points={
        "console_scripts": ["pypaq = pypaq.cli:main"],
    },

    # metadata to display on PyPI
    description="Exact quasisymmetric generating functions of pattern "
                "avoiding permutations",
    keywords="pattern avoidance, quasisymmetric functions, Knuth classes, "
             "Robinson-Schensted",
    license="MIT",
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10'
    ]
)
