from distutils.core import setup

from setuptools import find_packages

with open('README.md', 'r') as f:
    readme = f.read()

dependencies = [
    'numpy>=1.17',
    'networkx>=2.4',
    'typing-extensions',
    'PyYAML>=5.1',
]

setup(
    name="hypernest",
    version="0.1.0",
    description='Unified simple, nesting and directed hypergraphs for chemistry and beyond',
    long_description=readme,
    long_description_content_type='text/markdown',
    license='MIT',
    py_modules=[],
    python_requires='>=3.8',
    install_requires=dependencies,
    packages=find_packages(exclude=['tests', 'tests.*']),
    package_data={'hypernest': ['py.typed']},
    entry_points={
        'console_scripts': ['hypernest = hypernest.main:main'],
    },
    classifiers=[
        'Development Status :: 3 - Alpha',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Topic :: Scientific/Engineering :: Chemistry',
    ]
)
