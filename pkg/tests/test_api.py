"""
File: tests/test_api.py
Tests for the depth REST endpoint: results, caching and error statuses.
"""

import pytest
from django.urls import reverse

SIMPLEX = [[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]]


@pytest.fixture
def depth_url():
    return reverse('api:depth')


class TestDepthEndpoint:
    def test_results(self, api_client, depth_url):
        response = api_client.post(
            depth_url, {'data': SIMPLEX, 'queries': [[0, 0, 0], [5, 5, 5]]}, format='json'
        )
        assert response.status_code == 200
        body = response.json()
        assert body['algorithm'] == 'rcom'
        assert body['count'] == 2
        assert body['cached'] is False
        assert [r['fraction'] for r in body['results']] == ['1/4', '0/4']

    @pytest.mark.parametrize('algorithm', ['adia', 'oracle'])
    def test_other_algorithms(self, api_client, depth_url, algorithm):
        response = api_client.post(
            depth_url,
            {'data': SIMPLEX, 'queries': [[0, 0, 0]], 'algorithm': algorithm},
            format='json',
        )
        assert response.status_code == 200
        assert response.json()['results'][0]['numerator'] == 1

    def test_identical_payload_is_cached(self, api_client, depth_url):
        payload = {'data': SIMPLEX, 'queries': [[0, 0, 0]]}
        first = api_client.post(depth_url, payload, format='json').json()
        second = api_client.post(depth_url, payload, format='json').json()
        assert first['cached'] is False
        assert second['cached'] is True
        assert first['results'] == second['results']

    def test_options_change_cache_key(self, api_client, depth_url):
        payload = {'data': SIMPLEX, 'queries': [[0, 0, 0]]}
        api_client.post(depth_url, payload, format='json')
        response = api_client.post(depth_url, dict(payload, algorithm='adia'), format='json')
        assert response.json()['cached'] is False

    def test_invalid_payload_400(self, api_client, depth_url):
        response = api_client.post(depth_url, {'data': [[1, 2], [3]]}, format='json')
        assert response.status_code == 400
        assert 'queries' in response.json()

    def test_degenerate_input_422(self, api_client, depth_url):
        data = [[1, 0, 0], [0, 1, 0], [-1, -1, 0], [0, 0, 1]]
        response = api_client.post(
            depth_url, {'data': data, 'queries': [[0, 0, 0]]}, format='json'
        )
        assert response.status_code == 422
        body = response.json()
        assert body['error'] == 'GeneralPositionError'
        assert body['combination']

    def test_too_few_points_422(self, api_client, depth_url):
        response = api_client.post(
            depth_url, {'data': SIMPLEX[:3], 'queries': [[0, 0, 0]]}, format='json'
        )
        assert response.status_code == 422
        assert response.json()['error'] == 'DegenerateInputError'

    def test_oracle_budget_413(self, api_client, depth_url, settings):
        settings.DEPTH = {'ORACLE_MAX_WORK': 5}
        payload = {'data': SIMPLEX, 'queries': [[0, 0, 0]], 'algorithm': 'oracle'}
        response = api_client.post(depth_url, payload, format='json')
        assert response.status_code == 413
        assert response.json()['error'] == 'OracleBudgetError'
        forced = api_client.post(depth_url, dict(payload, force=True), format='json')
        assert forced.status_code == 200

    def test_get_not_allowed(self, api_client, depth_url):
        assert api_client.get(depth_url).status_code == 405


class TestRoot:
    def test_api_root(self, api_client):
        response = api_client.get(reverse('api:api_root'))
        assert response.status_code == 200
        assert 'rcom' in response.json()['algorithms']

    def test_health(self, client):
        response = client.get('/health/')
        assert response.status_code == 200
        assert response.json()['status'] == 'ok'
