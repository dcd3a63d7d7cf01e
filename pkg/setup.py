import sys
from setuptools import setup, find_packages

if sys.version_info < (3, 9):
    sys.exit("squeezelink requires Python 3.9 or later.")

setup(
    name='squeezelink',
    use_scm_version={'fallback_version': '0.1.0'},
    packages=find_packages(exclude=['tests', 'tests.*']),
    license='GPL',
    description='Squeezing-encoded classical communication over a lossy '
                'plasmonic nanowire: Gaussian-state link simulator.',
    install_requires=[
        'numpy',
        'pandas>=1.5',
        'pyyaml',
        'scipy',
    ],
    setup_requires=['pytest-runner', 'setuptools_scm'],
    tests_require=['pytest', 'pytest-cov', 'pytest-asyncio'],
    test_suite='pytest',
    entry_points={
        'console_scripts': ['squeezelink = squeezelink.__main__:main'],
    },
    package_data={
        'squeezelink': ['conf.default.yml'],
    },
)
