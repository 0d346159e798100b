import setuptools

#with open("README.md", "r") as fh:
#    long_description = fh.read().replace("\r\n", "\n")

setuptools.setup(
    name='heckeutils',
    version='0.1.0',
    description='Exact localization of the diagrammatic Hecke category and relation checks',
    #long_description=long_description,
    #long_description_content_type='text/markdown',
    author='watashi',
    classifiers=[
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3 :: Only',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    packages=setuptools.find_packages(where='src'),
    package_dir={'': 'src'},
    python_requires='>=3.8, <4',
    install_requires=['numpy', 'pandas', 'scipy', 'sympy', 'tomli; python_version<"3.11"'],
    tests_require=["pytest", "pytest-cov"],
    entry_points={
        'console_scripts': ['heckeutils=heckeutils.cli:main'],
    },
)
