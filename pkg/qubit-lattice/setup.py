"""
Qubit Lattice Simulator - 패키지 설치 스크립트

`pip install -e .` 후 `qlattice` 명령으로 실행
"""

from setuptools import setup, find_packages

setup(
    name='qubit-lattice',
    version='1.0.0',
    description='c-NOT coupled qubit lattice simulator with regime and period analysis',
    long_description='''
    Toroidal lattice of real-amplitude qubits updated by c-NOT coupling to
    the four nearest neighbours, with an optional threshold collapse.
    Reproduces the aperiodic, periodic and static regimes and sweeps the
    oscillation period over the coupling strength.
    ''',
    packages=find_packages(exclude=['tests', 'tests.*']),
    install_requires=[
        'numpy>=1.26.0',
        'pandas>=2.1.0',
        'scipy>=1.11.0',
        'pyyaml>=6.0',
        'pydantic>=2.5.0,<3',
        'python-dotenv>=1.0.0',
        'tqdm>=4.65.0',
    ],
    extras_require={
        'plot': ['matplotlib>=3.8.0'],
    },
    entry_points={
        'console_scripts': [
            'qlattice=app.main:main',
        ],
    },
    zip_safe=False,
    python_requires='>=3.10',
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Physics',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
    ],
)
