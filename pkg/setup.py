#
# Package metadata for pyKronecker. Entry points and requirements are kept
# in sync with setup.cfg by hand.
#

from setuptools import setup

kwargs = {'author': '',
 'author_email': '',
 'classifiers': ['Intended Audience :: Science/Research',
                 'Topic :: Scientific/Engineering :: Mathematics',
                 'Programming Language :: Python :: 3'],
 'description': 'Representations of the 3-Kronecker quiver over small '
                'finite fields',
 'download_url': '',
 'entry_points': {'console_scripts':
                  ['pykronecker=pyKronecker.cli:main']},
 'include_package_data': True,
 'install_requires': ['numpy',
                      'galois',
                      'networkx',
                      'pydot',
                      'tqdm'],
 'keywords': ['quiver', 'representation theory', 'finite fields'],
 'license': '',
 'maintainer': '',
 'maintainer_email': '',
 'name': 'pyKronecker',
 'package_dir': {'': 'src'},
 'packages': ['pyKronecker', 'pyKronecker.test'],
 'python_requires': '>=3.8',
 'test_suite': 'pyKronecker.test',
 'url': '',
 'version': '0.1',
 'zip_safe': False}


setup(**kwargs)
