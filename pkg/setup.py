from setuptools import setup, find_packages

from pcpforge import __version__

with open("requirements.txt") as f:
    requirements = [l.strip() for l in f if l.strip() and not l.startswith("pytest")]

setup(
    name="pcpforge",
    version=__version__,
    description="Long Code PCP reductions from Label Cover: generators, verifiers and checks",
    packages=find_packages(include=["pcpforge", "pcpforge.*"]),
    package_data={"pcpforge": ["configs/*.yaml"]},
    install_requires=requirements,
    python_requires=">=3.6",
    entry_points={"console_scripts": ["pcpforge=pcpforge.cli.run_pcp:main"]},
)
