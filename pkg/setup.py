from setuptools import setup, find_packages

setup(
    name='divpoly',
    version='0.1.0',
    packages=find_packages(exclude=['tests', 'tests.*']),
    install_requires=[
        'setuptools',
        'sympy>=1.12',
    ],
    extras_require={
        'test': [
            'pytest>=7.4',
            'hypothesis>=6.80',
        ],
    },
    entry_points={
        'console_scripts': [
            'divpoly=divpoly.__main__:run',
        ],
    },
    description='Polynomial functions over finite-dimensional division algebras',
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',
    classifiers=[
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Operating System :: OS Independent',
    ],
    python_requires='>=3.11.3',
    include_package_data=True,
)

