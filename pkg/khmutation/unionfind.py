#!/usr/bin/env python
#coding:utf-8
# Author:  khmutation developers
# Purpose: disjoint set forest with path halving
# Created: 02.03.2026
# Copyright (c) 2026 by khmutation developers
# License: MIT License

from __future__ import absolute_import


class UnionFind(object):
    """
    Disjoint sets over arbitrary hashable items, created on first use.

    uf.find(x) -> representative of the set containing x
    uf.union(x, y) -> representative of the merged set
    uf.groups() -> dict representative -> list of members, in insertion order
    """
    __slots__ = ['_parent']

    def __init__(self, items=()):
        self._parent = {}
        for item in items:
            self._parent[item] = item

    def add(self, item):
        self._parent.setdefault(item, item)

    def find(self, item):
        parent = self._parent
        if item not in parent:
            parent[item] = item
            return item
        while parent[item] != item:
            parent[item] = parent[parent[item]]
            item = parent[item]
        return item

    def union(self, first, second):
        root1 = self.find(first)
        root2 = self.find(second)
        if root1 != root2:
            self._parent[root2] = root1
        return root1

    def __contains__(self, item):
        return item in self._parent

    def __iter__(self):
        return iter(self._parent)

    def groups(self):
        result = {}
        for item in self._parent:
            result.setdefault(self.find(item), []).append(item)
        return result
