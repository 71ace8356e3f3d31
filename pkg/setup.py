from setuptools import setup, find_packages

setup(name='lfpp',
      version='0.1.0.dev0',
      description="Liouville first passage percolation on the lattice",
      long_description=open('README.txt').read(),
      classifiers=('License :: OSI Approved :: Apache Software License',
                   'Operating System :: POSIX :: Linux',
                   'Programming Language :: Python :: 3',
                   'Topic :: Scientific/Engineering :: Mathematics'),
      keywords='gaussian free field, first passage percolation, lqg',
      author='The lfpp authors',
      license='Apache Software License',
      packages=find_packages(exclude=('tests', 'tests.*')),
      package_data={'lfpp.templates': ['*.gnuplot', '*.md']},
      include_package_data=True,
      zip_safe=False,
      python_requires='>=3.9',
      install_requires=(
          'numpy>=1.22',
          'scipy>=1.9',
          'SQLAlchemy>=1.4',
          'mako',
      ),
      entry_points="""\
      [console_scripts]
        lfpp = lfpp.cli:start
      """,
      tests_require=('nose2', 'coverage', 'mock'),
      test_suite='tests',
)
